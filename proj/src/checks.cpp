#include "denstat/checks.hpp"

#include <algorithm>
#include <sstream>

namespace denstat {

std::string Report::to_text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " (" << checked_range << ")";
    if (coefficient_witness) {
        const auto& w = *coefficient_witness;
        os << ": first difference at n=" << w.n << ", (a,b)=(" << w.a << "," << w.b
           << "): " << w.count_a << " vs " << w.count_b;
    } else if (input_witness) {
        const auto& w = *input_witness;
        os << ": failing input n=" << w.n << ", sigma=\"" << w.sigma.str()
           << "\", c=" << w.c << ": " << w.detail;
    }
    return os.str();
}

nlohmann::json Report::to_json() const {
    nlohmann::json witness = nullptr;
    if (coefficient_witness) {
        const auto& w = *coefficient_witness;
        witness = {{"type", "coefficient"}, {"n", w.n},          {"a", w.a},
                   {"b", w.b},              {"countA", w.count_a}, {"countB", w.count_b}};
    } else if (input_witness) {
        const auto& w = *input_witness;
        witness = {{"type", "input"},
                   {"n", w.n},
                   {"sigma", w.sigma.str()},
                   {"c", w.c},
                   {"detail", w.detail}};
    }
    return {{"verdict", pass ? "pass" : "fail"},
            {"checkedRange", checked_range},
            {"witness", witness}};
}

namespace {

std::string pair_label(const StatPair& p) {
    return p.first.str() + "/" + p.second.str();
}

// First cell where the two tables disagree, in (a, b) order; missing = 0.
std::optional<CoefficientWitness> first_difference(const JointDistribution& da,
                                                   const JointDistribution& db) {
    auto ia = da.entries.begin();
    auto ib = db.entries.begin();
    while (ia != da.entries.end() || ib != db.entries.end()) {
        if (ib == db.entries.end() || (ia != da.entries.end() && ia->first < ib->first)) {
            if (ia->second != 0)
                return CoefficientWitness{da.n, ia->first.first, ia->first.second,
                                          ia->second, 0};
            ++ia;
        } else if (ia == da.entries.end() || ib->first < ia->first) {
            if (ib->second != 0)
                return CoefficientWitness{da.n, ib->first.first, ib->first.second, 0,
                                          ib->second};
            ++ib;
        } else {
            if (ia->second != ib->second)
                return CoefficientWitness{da.n, ia->first.first, ia->first.second,
                                          ia->second, ib->second};
            ++ia;
            ++ib;
        }
    }
    return std::nullopt;
}

Report compare_distributions(const StatPair& pair_a, const StatPair& pair_b, int n_max,
                             int workers, int cap, const std::string& range_label) {
    Report report;
    report.checked_range = range_label;
    for (int n = 0; n <= n_max; ++n) {
        const JointDistribution da =
            joint_distribution(pair_a.first, pair_a.second, n, workers, cap);
        const JointDistribution db =
            joint_distribution(pair_b.first, pair_b.second, n, workers, cap);
        if (auto diff = first_difference(da, db)) {
            report.pass = false;
            report.coefficient_witness = diff;
            return report;
        }
    }
    return report;
}

}  // namespace

Report check_pair_equidistribution(const StatPair& pair_a, const StatPair& pair_b,
                                   int n_max, int workers, int cap) {
    return compare_distributions(pair_a, pair_b, n_max, workers, cap,
                                 "(" + pair_label(pair_a) + ") vs (" + pair_label(pair_b) +
                                     "), n <= " + std::to_string(n_max));
}

Report check_r_euler_mahonian(const StatPair& pair, int r, int n_max, int workers,
                              int cap) {
    if (r < 1) throw range_error("r must be >= 1, got " + std::to_string(r));
    Report report;
    report.checked_range = "(" + pair_label(pair) + ") r-Euler-Mahonian at r=" +
                           std::to_string(r) + ", n <= " + std::to_string(n_max);
    for (int n = 0; n <= n_max; ++n) {
        const StatPair reference =
            n <= r ? StatPair{StatDescriptor::zero_stat(), StatDescriptor::inv()}
                   : StatPair{StatDescriptor::rdes(r), StatDescriptor::rmaj(r)};
        const JointDistribution da =
            joint_distribution(pair.first, pair.second, n, workers, cap);
        const JointDistribution db =
            joint_distribution(reference.first, reference.second, n, workers, cap);
        if (auto diff = first_difference(da, db)) {
            report.pass = false;
            report.coefficient_witness = diff;
            return report;
        }
    }
    return report;
}

Report find_counterexample(const StatPair& pair_a, const StatPair& pair_b, int n_max,
                           int workers, int cap) {
    return compare_distributions(pair_a, pair_b, n_max, workers, cap,
                                 "searched (" + pair_label(pair_a) + ") vs (" +
                                     pair_label(pair_b) + ") for n <= " +
                                     std::to_string(n_max));
}

Report check_bijection(BijectionMap map, BijectionParams params, int n, int cap) {
    check_enumeration_cap(n, cap);
    const bool general = map == BijectionMap::phi_gh_den;
    const int g = general ? params.g : 1;
    const int h = general ? params.h : 1;
    Report report;
    {
        std::ostringstream os;
        os << (general ? "phi_gh_den(g=" + std::to_string(g) + ",h=" + std::to_string(h) +
                             ")"
                       : "phi_den")
           << " over S_" << (n - 1) << " x {0.." << (n - 1) << "} -> S_" << n;
        report.checked_range = os.str();
    }
    if (general && (h < 1 || h > n)) {
        throw range_error("h=" + std::to_string(h) + " outside [1, " + std::to_string(n) +
                          "]");
    }

    auto fail = [&](const Permutation& sigma, int c, std::string detail) {
        report.pass = false;
        report.input_witness = InputWitness{n, sigma, c, std::move(detail)};
    };

    std::vector<char> covered(static_cast<size_t>(factorial(n)), 0);

    for_each_permutation(
        n - 1,
        [&](const Permutation& sigma) {
            if (!report.pass) return;
            const GapLevelProfile profile = gap_level_profile(sigma, g, 1, h);
            const std::vector<int>& exclp = profile.exclp_positions;
            const int s = static_cast<int>(exclp.size());
            std::vector<int> k;
            for (int i = 1; i <= sigma.size(); ++i) {
                if (!std::binary_search(exclp.begin(), exclp.end(), i)) k.push_back(i);
            }
            const int den_sigma = gap_level_den(sigma, g, h);
            for (int c = 0; c <= n - 1 && report.pass; ++c) {
                const ApplyResult fwd = general ? phi_gh_den(g, h, sigma, c)
                                                : phi_den(sigma, c);
                const Permutation& w = fwd.image;
                if (w.size() != n) {
                    fail(sigma, c, "image has wrong size");
                    return;
                }
                const std::int64_t rank = lexicographic_rank(w);
                if (covered[static_cast<size_t>(rank)]) {
                    fail(sigma, c, "image " + w.str() + " already produced");
                    return;
                }
                covered[static_cast<size_t>(rank)] = 1;

                // Excedance(-letter position) set recurrence.
                const std::vector<int> exclp_w =
                    gap_level_profile(w, g, 1, h).exclp_positions;
                const int threshold = general ? s + g - 1 : s;
                std::vector<int> expected = exclp;
                if (c > threshold) {
                    const int d = general ? c - s - g + 1 : c - s;
                    expected.push_back(k[static_cast<size_t>(d) - 1]);
                    std::sort(expected.begin(), expected.end());
                }
                if (exclp_w != expected) {
                    fail(sigma, c, "excedance-letter set recurrence violated for image " +
                                       w.str());
                    return;
                }
                if (gap_level_den(w, g, h) != den_sigma + c) {
                    fail(sigma, c, "den increment violated for image " + w.str());
                    return;
                }
                const InvertResult back = general ? phi_gh_den_inverse(g, h, w)
                                                  : phi_den_inverse(w);
                if (back.preimage != sigma || back.c != c) {
                    fail(sigma, c,
                         "inverse returned (" + back.preimage.str() + ", " +
                             std::to_string(back.c) + ") for image " + w.str());
                    return;
                }
            }
        },
        cap);
    if (!report.pass) return report;

    // Every image hit exactly once, and inverse-then-forward closes the loop.
    for_each_permutation(
        n,
        [&](const Permutation& w) {
            if (!report.pass) return;
            if (!covered[static_cast<size_t>(lexicographic_rank(w))]) {
                fail(w, -1, "element of S_n never produced");
                return;
            }
            const InvertResult back = general ? phi_gh_den_inverse(g, h, w)
                                              : phi_den_inverse(w);
            const ApplyResult again = general ? phi_gh_den(g, h, back.preimage, back.c)
                                              : phi_den(back.preimage, back.c);
            if (again.image != w) {
                fail(w, back.c, "forward(inverse(w)) != w");
            }
        },
        cap);
    return report;
}

Report check_mahonian(int n_max, int g_max, int workers, int cap) {
    Report report;
    report.checked_range = "q-marginals of den/rden/den_h/gden vs [n]_q!, n <= " +
                           std::to_string(n_max) + ", g <= " + std::to_string(g_max);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<StatDescriptor> descriptors;
        descriptors.push_back(StatDescriptor::den());
        for (int r = 1; r <= n; ++r) descriptors.push_back(StatDescriptor::rden(r));
        for (int r = 1; r <= n; ++r) descriptors.push_back(StatDescriptor::den_level(r));
        for (int g = 1; g <= g_max; ++g) {
            for (int h = 1; h <= n; ++h) {
                descriptors.push_back(StatDescriptor::gap_den(g, h));
            }
        }
        const std::vector<std::int64_t> expected = q_factorial(n);
        for (const StatDescriptor& d : descriptors) {
            const JointDistribution jd =
                joint_distribution(StatDescriptor::zero_stat(), d, n, workers, cap);
            std::vector<std::int64_t> marginal = jd.q_marginal();
            const size_t len = std::max(marginal.size(), expected.size());
            for (size_t b = 0; b < len; ++b) {
                const std::int64_t got = b < marginal.size() ? marginal[b] : 0;
                const std::int64_t want = b < expected.size() ? expected[b] : 0;
                if (got != want) {
                    report.pass = false;
                    report.coefficient_witness = CoefficientWitness{
                        n, 0, static_cast<int>(b), got, want};
                    report.checked_range += " [descriptor " + d.str() + "]";
                    return report;
                }
            }
        }
    }
    return report;
}

namespace {

template <typename Body>
Report sweep_permutations(int n_max, int cap, std::string label, Body&& body) {
    Report report;
    report.checked_range = std::move(label);
    for (int n = 0; n <= n_max && report.pass; ++n) {
        for_each_permutation(
            n,
            [&](const Permutation& sigma) {
                if (!report.pass) return;
                std::string detail = body(sigma);
                if (!detail.empty()) {
                    report.pass = false;
                    report.input_witness = InputWitness{n, sigma, 0, std::move(detail)};
                }
            },
            cap);
    }
    return report;
}

}  // namespace

Report check_dumont_identity(int n_max, int cap) {
    return sweep_permutations(
        n_max, cap, "Dumont identity, n <= " + std::to_string(n_max),
        [](const Permutation& sigma) -> std::string {
            const int n = sigma.size();
            for (int v = 1; v <= n; ++v) {
                int lhs = 0, rhs = 0;
                for (int i = 1; i <= n; ++i) {
                    if (sigma.at(i) < v && v <= i) ++lhs;
                    if (sigma.at(i) >= v && v > i) ++rhs;
                }
                if (lhs != rhs) {
                    return "v=" + std::to_string(v) + ": " + std::to_string(lhs) +
                           " != " + std::to_string(rhs);
                }
            }
            return {};
        });
}

Report check_generalized_dumont_identity(int n_max, int cap) {
    return sweep_permutations(
        n_max, cap, "generalized Dumont identity, n <= " + std::to_string(n_max),
        [](const Permutation& sigma) -> std::string {
            const int n = sigma.size();
            for (int g = 1; g <= n; ++g) {
                for (int v = g; v <= n; ++v) {
                    int lhs = 0, rhs = 0;
                    for (int i = 1; i <= n; ++i) {
                        if (i >= v - g + 1 && sigma.at(i) < v) ++lhs;
                        if (i < v - g + 1 && sigma.at(i) >= v) ++rhs;
                    }
                    if (lhs != rhs + g - 1) {
                        return "g=" + std::to_string(g) + " v=" + std::to_string(v) +
                               ": " + std::to_string(lhs) + " != " +
                               std::to_string(rhs + g - 1);
                    }
                }
            }
            return {};
        });
}

Report check_exc_exclp_identity(int n_max, int cap) {
    return sweep_permutations(
        n_max, cap,
        "gExc_l = {i in gExclp_h : i >= l} for h <= g+l, n <= " + std::to_string(n_max),
        [](const Permutation& sigma) -> std::string {
            const int n = sigma.size();
            for (int g = 1; g <= n + 1; ++g) {
                for (int l = 1; l <= n + 1; ++l) {
                    for (int h = 1; h <= g + l; ++h) {
                        const GapLevelProfile profile = gap_level_profile(sigma, g, l, h);
                        std::vector<int> filtered;
                        for (int i : profile.exclp_positions) {
                            if (i >= l) filtered.push_back(i);
                        }
                        if (profile.exc_positions != filtered) {
                            return "g=" + std::to_string(g) + " l=" + std::to_string(l) +
                                   " h=" + std::to_string(h) + ": set mismatch";
                        }
                    }
                }
            }
            return {};
        });
}

Report check_level_split_identity(int n_max, int cap) {
    return sweep_permutations(
        n_max, cap,
        "exc + |B_r| = exc_r + r - 1, n <= " + std::to_string(n_max),
        [](const Permutation& sigma) -> std::string {
            const int n = sigma.size();
            for (int r = 1; r <= n + 1; ++r) {
                const auto [a, b] = level_split(sigma, 1, 1, r);
                const int lhs =
                    gap_level_exc_count(sigma, 1, 1) + static_cast<int>(b.size());
                const int rhs = gap_level_exc_count(sigma, 1, r) + r - 1;
                if (static_cast<int>(a.size() + b.size()) != r - 1) {
                    return "r=" + std::to_string(r) + ": |A|+|B| != r-1";
                }
                if (lhs != rhs) {
                    return "r=" + std::to_string(r) + ": " + std::to_string(lhs) +
                           " != " + std::to_string(rhs);
                }
            }
            return {};
        });
}

std::vector<Table1Row> reproduce_table1() {
    const Permutation sigma{6, 2, 1, 5, 3, 4};
    std::vector<Table1Row> rows;
    for (int c = 0; c <= 6; ++c) {
        Table1Row row;
        row.c = c;
        row.image = phi_den(sigma, c).image;
        for (int r = 1; r <= 6; ++r) {
            row.exc_den[static_cast<size_t>(r) - 1] = {
                gap_level_exc_count(row.image, 1, r), gap_level_den(row.image, 1, 1)};
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace denstat
