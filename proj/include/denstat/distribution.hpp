#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "denstat/enumeration.hpp"
#include "denstat/statistics.hpp"

namespace denstat {

// Joint frequency table of a statistic pair over S_n: entries[(a,b)] counts
// the permutations with stat1 = a, stat2 = b. Ordered map keeps every
// serialization deterministic.
struct JointDistribution {
    int n = 0;
    std::map<std::pair<int, int>, std::int64_t> entries;

    void add(int a, int b, std::int64_t count = 1) { entries[{a, b}] += count; }

    // Pointwise addition; merging partial tables from any partition of S_n
    // is commutative and associative.
    void merge(const JointDistribution& other);

    std::int64_t total() const;

    // Coefficients of the q-polynomial obtained by summing out the first
    // statistic.
    std::vector<std::int64_t> q_marginal() const;

    // Rows "a,b,count" sorted by (a,b).
    std::string to_csv() const;

    nlohmann::json to_json(const std::string& pair_label) const;

    bool operator==(const JointDistribution&) const = default;
};

// Exhaustive joint distribution of (stat1, stat2) over S_n. With workers > 1
// the enumeration is partitioned by first letter and the per-worker tables
// are merged; the result does not depend on the worker count.
JointDistribution joint_distribution(const StatDescriptor& stat1,
                                     const StatDescriptor& stat2, int n, int workers = 1,
                                     int cap = kDefaultEnumerationCap);

// Coefficients of [n]_q! = prod_{k=1..n} (1 + q + ... + q^{k-1});
// degree n(n-1)/2.
std::vector<std::int64_t> q_factorial(int n);

}  // namespace denstat
