#pragma once

// Test-only reference implementations, transcribed one statistic at a time
// from the standalone definitions. Each one builds the excedance-letter
// subsequences explicitly and must stay independent of the library's unified
// gap/level engine so the two routes can be compared.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "denstat/enumeration.hpp"
#include "denstat/permutation.hpp"

namespace oracle {

inline int inv(const std::vector<int>& word) {
    int count = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        for (size_t j = i + 1; j < word.size(); ++j) {
            if (word[i] > word[j]) ++count;
        }
    }
    return count;
}

// den: sum of excedances + inv(EXCL) + inv(NEXCL), with excedance sigma_i > i.
inline int den(const denstat::Permutation& p) {
    int sum = 0;
    std::vector<int> excl, nexcl;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(i) > i) {
            sum += i;
            excl.push_back(p.at(i));
        } else {
            nexcl.push_back(p.at(i));
        }
    }
    return sum + inv(excl) + inv(nexcl);
}

// rden: r-excedances sigma_i >= i + r, each contributing i + r - 1.
inline int rden(const denstat::Permutation& p, int r) {
    int sum = 0;
    std::vector<int> excl, nexcl;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(i) >= i + r) {
            sum += i + r - 1;
            excl.push_back(p.at(i));
        } else {
            nexcl.push_back(p.at(i));
        }
    }
    return sum + inv(excl) + inv(nexcl);
}

// den_r: excedance-letters that are >= r, each position contributing i.
inline int den_level(const denstat::Permutation& p, int r) {
    int sum = 0;
    std::vector<int> excl, nexcl;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(i) > i && p.at(i) >= r) {
            sum += i;
            excl.push_back(p.at(i));
        } else {
            nexcl.push_back(p.at(i));
        }
    }
    return sum + inv(excl) + inv(nexcl);
}

// gden_h: sigma_i >= i + g and sigma_i >= h, contributing i + g - 1.
inline int gden(const denstat::Permutation& p, int g, int h) {
    int sum = 0;
    std::vector<int> excl, nexcl;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(i) >= i + g && p.at(i) >= h) {
            sum += i + g - 1;
            excl.push_back(p.at(i));
        } else {
            nexcl.push_back(p.at(i));
        }
    }
    return sum + inv(excl) + inv(nexcl);
}

inline int exc(const denstat::Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(i) > i) ++count;
    }
    return count;
}

// exc_r: excedances at positions >= r.
inline int exc_level(const denstat::Permutation& p, int r) {
    int count = 0;
    for (int i = r; i <= p.size(); ++i) {
        if (p.at(i) > i) ++count;
    }
    return count;
}

inline int des(const denstat::Permutation& p) {
    int count = 0;
    for (int i = 1; i < p.size(); ++i) {
        if (p.at(i) > p.at(i + 1)) ++count;
    }
    return count;
}

inline int maj(const denstat::Permutation& p) {
    int sum = 0;
    for (int i = 1; i < p.size(); ++i) {
        if (p.at(i) > p.at(i + 1)) sum += i;
    }
    return sum;
}

inline std::pair<int, int> rdes_rmaj(const denstat::Permutation& p, int r) {
    int rdes = 0, rmaj = 0;
    for (int i = 1; i < p.size(); ++i) {
        if (p.at(i) >= p.at(i + 1) + r) {
            ++rdes;
            rmaj += i;
        }
    }
    for (int i = 1; i <= p.size(); ++i) {
        for (int j = i + 1; j <= p.size(); ++j) {
            if (p.at(i) > p.at(j) && p.at(i) < p.at(j) + r) ++rmaj;
        }
    }
    return {rdes, rmaj};
}

// Joint frequency table via a plain enumeration loop.
template <typename F1, typename F2>
std::map<std::pair<int, int>, std::int64_t> table(int n, F1&& stat1, F2&& stat2) {
    std::map<std::pair<int, int>, std::int64_t> out;
    denstat::for_each_permutation(n, [&](const denstat::Permutation& p) {
        ++out[{stat1(p), stat2(p)}];
    });
    return out;
}

}  // namespace oracle
