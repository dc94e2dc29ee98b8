#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "denstat/bijections.hpp"
#include "denstat/distribution.hpp"

namespace denstat {

// First differing cell of two joint distributions: smallest n, then
// lexicographically smallest (a, b).
struct CoefficientWitness {
    int n = 0;
    int a = 0;
    int b = 0;
    std::int64_t count_a = 0;
    std::int64_t count_b = 0;

    bool operator==(const CoefficientWitness&) const = default;
};

// A concrete failing input of a bijection check.
struct InputWitness {
    int n = 0;
    Permutation sigma;
    int c = 0;
    std::string detail;

    bool operator==(const InputWitness&) const = default;
};

struct Report {
    bool pass = true;
    std::string checked_range;
    std::optional<CoefficientWitness> coefficient_witness;
    std::optional<InputWitness> input_witness;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

using StatPair = std::pair<StatDescriptor, StatDescriptor>;

// Pass iff the joint distributions of the two pairs agree for every
// n in [0, n_max]; otherwise carries the first difference.
Report check_pair_equidistribution(const StatPair& pair_a, const StatPair& pair_b,
                                   int n_max, int workers = 1,
                                   int cap = kDefaultEnumerationCap);

// The r-Euler-Mahonian test: for n <= r the pair must match (zero, inv),
// beyond that the (rdes, rmaj) pair at gap r.
Report check_r_euler_mahonian(const StatPair& pair, int r, int n_max, int workers = 1,
                              int cap = kDefaultEnumerationCap);

// Searches for the smallest n <= n_max where the two pairs' distributions
// differ; pass means no counterexample exists in range.
Report find_counterexample(const StatPair& pair_a, const StatPair& pair_b, int n_max,
                           int workers = 1, int cap = kDefaultEnumerationCap);

enum class BijectionMap { phi_den, phi_gh_den };

struct BijectionParams {
    int g = 1;
    int h = 1;
};

// Verifies, over all of S_{n-1} x {0..n-1}: the image covers S_n exactly
// once, the inverse round-trips both ways, the excedance(-letter) set
// recurrence, and the den increment.
Report check_bijection(BijectionMap map, BijectionParams params, int n,
                       int cap = kDefaultEnumerationCap);

// q-marginal == [n]_q! for every descriptor in {den, rden (r<=n),
// den_h (h<=n), gden (g<=g_max, h<=n)} and every n <= n_max.
Report check_mahonian(int n_max, int g_max = 4, int workers = 1,
                      int cap = kDefaultEnumerationCap);

// |{sigma_i : sigma_i < v <= i}| = |{sigma_i : sigma_i >= v > i}| for all
// sigma in S_n, n <= n_max, v in [1, n].
Report check_dumont_identity(int n_max, int cap = kDefaultEnumerationCap);

// |{sigma_i : i >= v-g+1, sigma_i < v}| = |{sigma_i : i < v-g+1,
// sigma_i >= v}| + g - 1 for g in [1, n], v in [g, n].
Report check_generalized_dumont_identity(int n_max, int cap = kDefaultEnumerationCap);

// For h <= g + l: the l-level excedance set equals the excedance-letter
// positions at level h restricted to i >= l.
Report check_exc_exclp_identity(int n_max, int cap = kDefaultEnumerationCap);

// exc(sigma) + |B_r(sigma)| = exc_r(sigma) + r - 1 with (A, B) the level
// split of [r-1].
Report check_level_split_identity(int n_max, int cap = kDefaultEnumerationCap);

// The c = 0..6 rows for sigma = 621534: image and (exc_r, den) for r = 1..6.
struct Table1Row {
    int c = 0;
    Permutation image;
    std::array<std::pair<int, int>, 6> exc_den;
};

std::vector<Table1Row> reproduce_table1();

}  // namespace denstat
