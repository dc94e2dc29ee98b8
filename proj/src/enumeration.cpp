#include "denstat/enumeration.hpp"

namespace denstat {

void check_enumeration_cap(int n, int cap) {
    if (n < 0) throw range_error("n must be >= 0, got " + std::to_string(n));
    if (n > cap) {
        throw cap_exceeded_error("n=" + std::to_string(n) +
                                 " exceeds the enumeration cap " + std::to_string(cap));
    }
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t lexicographic_rank(const Permutation& p) {
    const int n = p.size();
    std::int64_t rank = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller_right = 0;
        for (int j = i + 1; j <= n; ++j) {
            if (p.at(j) < p.at(i)) ++smaller_right;
        }
        rank += smaller_right * factorial(n - i);
    }
    return rank;
}

}  // namespace denstat
