#include <iostream>

#include "denstat/cli.hpp"

int main(int argc, char** argv) {
    return denstat::run_cli(argc, argv, std::cout, std::cerr);
}
