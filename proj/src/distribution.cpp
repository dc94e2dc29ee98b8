#include "denstat/distribution.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace denstat {

void JointDistribution::merge(const JointDistribution& other) {
    for (const auto& [key, count] : other.entries) entries[key] += count;
}

std::int64_t JointDistribution::total() const {
    std::int64_t sum = 0;
    for (const auto& [key, count] : entries) sum += count;
    return sum;
}

std::vector<std::int64_t> JointDistribution::q_marginal() const {
    int max_b = 0;
    for (const auto& [key, count] : entries) max_b = std::max(max_b, key.second);
    std::vector<std::int64_t> coeffs(static_cast<size_t>(max_b) + 1, 0);
    for (const auto& [key, count] : entries) coeffs[static_cast<size_t>(key.second)] += count;
    return coeffs;
}

std::string JointDistribution::to_csv() const {
    std::ostringstream os;
    for (const auto& [key, count] : entries) {
        os << key.first << ',' << key.second << ',' << count << '\n';
    }
    return os.str();
}

nlohmann::json JointDistribution::to_json(const std::string& pair_label) const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, count] : entries) {
        rows.push_back({key.first, key.second, count});
    }
    return {{"n", n}, {"pair", pair_label}, {"entries", rows}};
}

JointDistribution joint_distribution(const StatDescriptor& stat1,
                                     const StatDescriptor& stat2, int n, int workers,
                                     int cap) {
    check_enumeration_cap(n, cap);
    JointDistribution out;
    out.n = n;
    if (workers <= 1 || n < 2) {
        for_each_permutation(
            n, [&](const Permutation& p) { out.add(eval_stat(stat1, p), eval_stat(stat2, p)); },
            cap);
        return out;
    }
    const int nthreads = std::min(workers, n);
    std::vector<JointDistribution> partial(static_cast<size_t>(nthreads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([&, tid] {
            JointDistribution& local = partial[static_cast<size_t>(tid)];
            local.n = n;
            for (int first = tid + 1; first <= n; first += nthreads) {
                for_each_permutation_with_first(
                    n, first,
                    [&](const Permutation& p) {
                        local.add(eval_stat(stat1, p), eval_stat(stat2, p));
                    },
                    cap);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& local : partial) out.merge(local);
    return out;
}

std::vector<std::int64_t> q_factorial(int n) {
    std::vector<std::int64_t> coeffs{1};
    for (int k = 2; k <= n; ++k) {
        // Multiply by [k]_q = 1 + q + ... + q^{k-1}.
        std::vector<std::int64_t> next(coeffs.size() + static_cast<size_t>(k) - 1, 0);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            for (int j = 0; j < k; ++j) next[i + static_cast<size_t>(j)] += coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace denstat
