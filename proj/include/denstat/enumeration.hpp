#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "denstat/permutation.hpp"

namespace denstat {

// Default bound on exhaustive enumeration (10! = 3.6M permutations).
inline constexpr int kDefaultEnumerationCap = 10;

struct cap_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_enumeration_cap(int n, int cap);

std::int64_t factorial(int n);

// Lexicographic rank of a permutation within S_n, in [0, n!). Lehmer code.
std::int64_t lexicographic_rank(const Permutation& p);

// Calls fn(const Permutation&) for every element of S_n in lexicographic
// order of one-line words. S_0 yields exactly the empty permutation.
template <typename F>
void for_each_permutation(int n, F&& fn, int cap = kDefaultEnumerationCap) {
    check_enumeration_cap(n, cap);
    std::vector<int> letters(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) letters[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
}

// Same, restricted to permutations whose first letter is `first`; used to
// partition S_n across workers. Requires n >= 1.
template <typename F>
void for_each_permutation_with_first(int n, int first, F&& fn,
                                     int cap = kDefaultEnumerationCap) {
    check_enumeration_cap(n, cap);
    std::vector<int> letters;
    letters.push_back(first);
    for (int v = 1; v <= n; ++v) {
        if (v != first) letters.push_back(v);
    }
    do {
        fn(Permutation(letters));
    } while (std::next_permutation(letters.begin() + 1, letters.end()));
}

}  // namespace denstat
