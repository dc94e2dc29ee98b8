#include "denstat/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "denstat/statistics.hpp"

namespace denstat {

std::string to_string(MapCase c) {
    switch (c) {
        case MapCase::case1: return "Case1";
        case MapCase::case2: return "Case2";
        case MapCase::case3: return "Case3";
    }
    return "?";
}

namespace {

constexpr int kHole = 0;

void snapshot(BijectionTrace& trace, std::string name, const std::vector<int>& seq,
              std::vector<int> highlights = {}) {
    trace.steps.push_back({std::move(name), seq, std::move(highlights)});
}

int position_of(const std::vector<int>& seq, int letter) {
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        if (seq[i] == letter) return i + 1;
    }
    return -1;
}

// Shifts the letters at k-positions y0..t one k-slot to the right, the last
// one landing on the fresh position n (k_{t+1}); leaves a hole at k_{y0}.
// Grows the word from n-1 to n letters.
std::vector<int> shift_right(const std::vector<int>& letters, const std::vector<int>& k,
                             int y0, int n) {
    std::vector<int> w(letters);
    w.push_back(kHole);
    std::vector<int> kk(k);
    kk.push_back(n);
    for (int i = static_cast<int>(kk.size()); i >= y0 + 1; --i) {
        w[static_cast<size_t>(kk[static_cast<size_t>(i - 1)]) - 1] =
            w[static_cast<size_t>(kk[static_cast<size_t>(i - 2)]) - 1];
    }
    w[static_cast<size_t>(kk[static_cast<size_t>(y0 - 1)]) - 1] = kHole;
    return w;
}

// Inverse of shift_right: moves the letters at the given k-positions (all
// right of the hole at q) one slot left onto [q] + later; the vacated slot
// must be position n, which is dropped.
std::vector<int> unshift_left(std::vector<int> seq, int q, const std::vector<int>& later) {
    int prev = q;
    for (int pos : later) {
        seq[static_cast<size_t>(prev) - 1] = seq[static_cast<size_t>(pos) - 1];
        prev = pos;
    }
    assert(prev == static_cast<int>(seq.size()));
    seq.pop_back();
    return seq;
}

// (letter, position) pairs sorted by letter value.
using Chain = std::vector<std::pair<int, int>>;

}  // namespace

// ---------------------------------------------------------------------------
// phi_den
// ---------------------------------------------------------------------------

ApplyResult phi_den(const Permutation& sigma, int c) {
    const int n = sigma.size() + 1;
    if (c < 0 || c > n - 1) {
        throw range_error("c=" + std::to_string(c) + " outside [0, " +
                          std::to_string(n - 1) + "]");
    }
    BijectionTrace trace;
    std::vector<int> exc_positions, k;
    for (int i = 1; i < n; ++i) {
        if (sigma.at(i) > i) {
            exc_positions.push_back(i);
        } else {
            k.push_back(i);
        }
    }
    std::vector<int> e;
    for (int i : exc_positions) e.push_back(sigma.at(i));
    std::sort(e.begin(), e.end());
    const int s = static_cast<int>(e.size());
    const int t = static_cast<int>(k.size());
    trace.s = s;
    trace.exc_letters = e;
    trace.nonexc_positions = k;
    snapshot(trace, "Initial", sigma.letters(), exc_positions);

    std::vector<int> w;
    if (c == 0) {
        trace.case_tag = MapCase::case1;
        w = sigma.letters();
        w.push_back(n);
        snapshot(trace, "Placing n", w, {n});
    } else if (c <= s) {
        trace.case_tag = MapCase::case2;
        const int d = s + 1 - c;
        const int ed = e[static_cast<size_t>(d) - 1];
        trace.d = d;
        trace.p = ed;  // pivot position; e_d - g + 1 with g = 1

        // Excedance-letters strictly left of position e_d that are >= e_d,
        // by increasing value. The smallest is e_d itself.
        Chain chain;
        for (int i : exc_positions) {
            if (i < ed && sigma.at(i) >= ed) chain.emplace_back(sigma.at(i), i);
        }
        std::sort(chain.begin(), chain.end());
        assert(!chain.empty() && chain.front().first == ed);
        const int x = static_cast<int>(chain.size());
        std::vector<int> chain_positions;
        for (auto& [letter, pos] : chain) {
            trace.chain_letters.push_back(letter);
            chain_positions.push_back(pos);
        }

        // Step 1: e_{j_i} -> e_{j_{i+1}}, the largest becoming n.
        w = sigma.letters();
        for (int i = 0; i < x; ++i) {
            const int next = (i + 1 < x) ? chain[static_cast<size_t>(i) + 1].first : n;
            w[static_cast<size_t>(chain[static_cast<size_t>(i)].second) - 1] = next;
        }
        snapshot(trace, "Adjusting Excedance-Letters", w, chain_positions);

        // Step 2: non-excedance-letters weakly right of position e_d move one
        // non-excedance to the right.
        int y = 1;
        while (y <= t && k[static_cast<size_t>(y) - 1] < ed) ++y;
        assert(y <= t);
        trace.y = y;
        w = shift_right(w, k, y, n);
        std::vector<int> shifted(k.begin() + (y - 1), k.end());
        shifted.push_back(n);
        snapshot(trace, "Shifting Non-Excedance-Letters", w, shifted);

        // Step 3: e_d lands at k_y.
        w[static_cast<size_t>(k[static_cast<size_t>(y) - 1]) - 1] = ed;
        snapshot(trace, "Placing e_d", w, {k[static_cast<size_t>(y) - 1]});
    } else {
        trace.case_tag = MapCase::case3;
        const int d = c - s;  // 1 <= d <= t
        trace.d = d;
        w = shift_right(sigma.letters(), k, d, n);
        std::vector<int> shifted(k.begin() + (d - 1), k.end());
        shifted.push_back(n);
        snapshot(trace, "Shifting Non-Excedance-Letters", w, shifted);
        const int kd = k[static_cast<size_t>(d) - 1];
        w[static_cast<size_t>(kd) - 1] = n;
        snapshot(trace, "Placing n", w, {kd});
        int u = 0;
        for (int i : exc_positions) {
            if (i < kd) ++u;
        }
        trace.u = u;
        trace.v = s - u;
    }
    trace.z = position_of(w, n);
    return {Permutation(std::move(w)), std::move(trace)};
}

std::vector<int> critical_nonexc_positions(const Permutation& w) {
    const int n = w.size();
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        const int v = w.at(i);
        if (v > i) continue;
        bool critical = true;
        for (int j = v; j < i; ++j) {
            if (w.at(j) <= j) {
                critical = false;
                break;
            }
        }
        if (critical) out.push_back(i);
    }
    return out;
}

InvertResult phi_den_inverse(const Permutation& w) {
    const int n = w.size();
    if (n < 1) throw range_error("cannot invert on the empty permutation");
    BijectionTrace trace;
    const int z = position_of(w.letters(), n);
    const std::vector<int> crit = critical_nonexc_positions(w);
    assert(!crit.empty());
    const int a_pos = crit.back();
    const int a = w.at(a_pos);
    trace.z = z;
    trace.a = a;
    snapshot(trace, "Initial", w.letters());

    std::vector<int> k_w;  // non-excedance positions of w
    for (int i = 1; i <= n; ++i) {
        if (w.at(i) <= i) k_w.push_back(i);
    }

    std::vector<int> seq = w.letters();
    if (z == n) {
        trace.case_tag = MapCase::case1;
        seq.pop_back();
        snapshot(trace, "Removing n", seq);
    } else if (z < a) {
        trace.case_tag = MapCase::case2;
        const int ed = a;
        trace.p = ed;
        // Excedance-letters of w strictly left of position e_d that exceed
        // e_d: the forward chain shifted one step up, ending in n.
        Chain chain;
        for (int i = 1; i < ed; ++i) {
            if (w.at(i) > i && w.at(i) > ed) chain.emplace_back(w.at(i), i);
        }
        std::sort(chain.begin(), chain.end());
        assert(!chain.empty() && chain.back().first == n);
        for (auto& [letter, pos] : chain) trace.chain_letters.push_back(letter);

        seq[static_cast<size_t>(a_pos) - 1] = kHole;
        snapshot(trace, "Deleting e_d", seq, {a_pos});

        std::vector<int> later;
        for (int pos : k_w) {
            if (pos > a_pos) later.push_back(pos);
        }
        seq = unshift_left(std::move(seq), a_pos, later);
        snapshot(trace, "Unshifting Non-Excedance-Letters", seq, later);

        int prev = ed;
        for (auto& [letter, pos] : chain) {
            seq[static_cast<size_t>(pos) - 1] = prev;
            prev = letter;
        }
        std::vector<int> chain_positions;
        for (auto& [letter, pos] : chain) chain_positions.push_back(pos);
        snapshot(trace, "Downshifting Excedance-Letters", seq, chain_positions);
    } else {
        trace.case_tag = MapCase::case3;
        seq[static_cast<size_t>(z) - 1] = kHole;
        snapshot(trace, "Deleting n", seq, {z});
        std::vector<int> later;
        for (int pos : k_w) {
            if (pos > z) later.push_back(pos);
        }
        seq = unshift_left(std::move(seq), z, later);
        snapshot(trace, "Unshifting Non-Excedance-Letters", seq, later);
    }

    Permutation sigma(std::move(seq));
    const int c = gap_level_den(w, 1, 1) - gap_level_den(sigma, 1, 1);

    // Mirror the forward trace bookkeeping on the recovered preimage.
    std::vector<int> exc_positions;
    for (int i = 1; i < n; ++i) {
        if (sigma.at(i) > i) {
            exc_positions.push_back(i);
            trace.exc_letters.push_back(sigma.at(i));
        } else {
            trace.nonexc_positions.push_back(i);
        }
    }
    std::sort(trace.exc_letters.begin(), trace.exc_letters.end());
    trace.s = static_cast<int>(trace.exc_letters.size());
    if (trace.case_tag == MapCase::case2) {
        trace.d = trace.s + 1 - c;
    } else if (trace.case_tag == MapCase::case3) {
        trace.d = c - trace.s;
        int u = 0;
        for (int i : exc_positions) {
            if (i < z) ++u;
        }
        trace.u = u;
        trace.v = trace.s - u;
    }
    return {std::move(sigma), c, std::move(trace)};
}

// ---------------------------------------------------------------------------
// phi_gh_den
// ---------------------------------------------------------------------------

ApplyResult phi_gh_den(int g, int h, const Permutation& sigma, int c) {
    const int n = sigma.size() + 1;
    if (g < 1) throw range_error("g must be >= 1, got " + std::to_string(g));
    if (h < 1 || h > n) {
        throw range_error("h=" + std::to_string(h) + " outside [1, " + std::to_string(n) +
                          "]");
    }
    if (c < 0 || c > n - 1) {
        throw range_error("c=" + std::to_string(c) + " outside [0, " +
                          std::to_string(n - 1) + "]");
    }
    BijectionTrace trace;
    std::vector<int> exclp, k;
    for (int i = 1; i < n; ++i) {
        if (sigma.at(i) >= i + g && sigma.at(i) >= h) {
            exclp.push_back(i);
        } else {
            k.push_back(i);
        }
    }
    std::vector<int> e;
    for (int i : exclp) e.push_back(sigma.at(i));
    std::sort(e.begin(), e.end());
    const int s = static_cast<int>(e.size());
    const int t = static_cast<int>(k.size());
    trace.s = s;
    trace.exc_letters = e;
    trace.nonexc_positions = k;
    snapshot(trace, "Initial", sigma.letters(), exclp);

    std::vector<int> w;
    if (c <= g - 1) {
        trace.case_tag = MapCase::case1;
        // Insert n immediately after sigma_{n-1-c}; index 0 means prepend.
        const int idx = n - 1 - c;
        w = sigma.letters();
        w.insert(w.begin() + idx, n);
        snapshot(trace, "Placing n", w, {idx + 1});
    } else if (c <= s + g - 1) {
        trace.case_tag = MapCase::case2;
        const int d = s + g - c;
        const int ed = e[static_cast<size_t>(d) - 1];
        const int p = ed - g + 1;
        trace.d = d;
        trace.p = p;

        Chain chain;
        for (int i : exclp) {
            if (i < p && sigma.at(i) >= ed) chain.emplace_back(sigma.at(i), i);
        }
        std::sort(chain.begin(), chain.end());
        assert(!chain.empty() && chain.front().first == ed);
        const int x = static_cast<int>(chain.size());
        std::vector<int> chain_positions;
        for (auto& [letter, pos] : chain) {
            trace.chain_letters.push_back(letter);
            chain_positions.push_back(pos);
        }

        w = sigma.letters();
        for (int i = 0; i < x; ++i) {
            const int next = (i + 1 < x) ? chain[static_cast<size_t>(i) + 1].first : n;
            w[static_cast<size_t>(chain[static_cast<size_t>(i)].second) - 1] = next;
        }
        snapshot(trace, "Step 1", w, chain_positions);

        int y = 1;
        while (y <= t && k[static_cast<size_t>(y) - 1] < p) ++y;
        assert(y <= t);
        trace.y = y;
        w = shift_right(w, k, y, n);
        std::vector<int> shifted(k.begin() + (y - 1), k.end());
        shifted.push_back(n);
        snapshot(trace, "Step 2", w, shifted);

        w[static_cast<size_t>(k[static_cast<size_t>(y) - 1]) - 1] = ed;
        snapshot(trace, "Step 3", w, {k[static_cast<size_t>(y) - 1]});
    } else {
        trace.case_tag = MapCase::case3;
        const int d = c - s - g + 1;  // 1 <= d <= t
        trace.d = d;
        w = shift_right(sigma.letters(), k, d, n);
        std::vector<int> shifted(k.begin() + (d - 1), k.end());
        shifted.push_back(n);
        snapshot(trace, "Step i", w, shifted);
        const int kd = k[static_cast<size_t>(d) - 1];
        w[static_cast<size_t>(kd) - 1] = n;
        snapshot(trace, "Step ii", w, {kd});
        int u = 0;
        for (int i : exclp) {
            if (i < kd) ++u;
        }
        trace.u = u;
        trace.v = s - u;
    }
    trace.z = position_of(w, n);
    return {Permutation(std::move(w)), std::move(trace)};
}

std::vector<int> critical_gap_nonexc_positions(int g, const Permutation& w) {
    if (g < 1) throw range_error("g must be >= 1, got " + std::to_string(g));
    const int n = w.size();
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        const int v = w.at(i);
        if (v >= i + g) continue;
        bool critical = true;
        for (int j = std::max(1, v - g + 1); j < i; ++j) {
            if (w.at(j) < j + g) {
                critical = false;
                break;
            }
        }
        if (critical) out.push_back(i);
    }
    return out;
}

InvertResult phi_gh_den_inverse(int g, int h, const Permutation& w) {
    const int n = w.size();
    if (n < 1) throw range_error("cannot invert on the empty permutation");
    if (g < 1) throw range_error("g must be >= 1, got " + std::to_string(g));
    if (h < 1 || h > n) {
        throw range_error("h=" + std::to_string(h) + " outside [1, " + std::to_string(n) +
                          "]");
    }
    BijectionTrace trace;
    const int z = position_of(w.letters(), n);
    const std::vector<int> crit = critical_gap_nonexc_positions(g, w);
    assert(!crit.empty());
    const int a_pos = crit.back();
    const int a = w.at(a_pos);
    trace.z = z;
    trace.a = a;
    snapshot(trace, "Initial", w.letters());

    auto is_exclp_w = [&](int i) { return w.at(i) >= i + g && w.at(i) >= h; };
    std::vector<int> k_w;  // non-g-gap h-level excedance-letter positions of w
    for (int i = 1; i <= n; ++i) {
        if (!is_exclp_w(i)) k_w.push_back(i);
    }

    std::vector<int> seq = w.letters();
    if (z + g > n) {
        trace.case_tag = MapCase::case1;
        seq.erase(seq.begin() + (z - 1));
        snapshot(trace, "Removing n", seq);
    } else if (std::max(z + g, h) <= a) {
        trace.case_tag = MapCase::case2;
        const int ed = a;
        const int p = ed - g + 1;
        trace.p = p;
        Chain chain;
        for (int i = 1; i < p; ++i) {
            if (is_exclp_w(i) && w.at(i) > ed) chain.emplace_back(w.at(i), i);
        }
        std::sort(chain.begin(), chain.end());
        assert(!chain.empty() && chain.back().first == n);
        for (auto& [letter, pos] : chain) trace.chain_letters.push_back(letter);

        seq[static_cast<size_t>(a_pos) - 1] = kHole;
        snapshot(trace, "Deleting e_d", seq, {a_pos});

        std::vector<int> later;
        for (int pos : k_w) {
            if (pos > a_pos) later.push_back(pos);
        }
        seq = unshift_left(std::move(seq), a_pos, later);
        snapshot(trace, "Unshifting Non-Excedance-Letters", seq, later);

        int prev = ed;
        for (auto& [letter, pos] : chain) {
            seq[static_cast<size_t>(pos) - 1] = prev;
            prev = letter;
        }
        std::vector<int> chain_positions;
        for (auto& [letter, pos] : chain) chain_positions.push_back(pos);
        snapshot(trace, "Downshifting Excedance-Letters", seq, chain_positions);
    } else {
        trace.case_tag = MapCase::case3;
        seq[static_cast<size_t>(z) - 1] = kHole;
        snapshot(trace, "Deleting n", seq, {z});
        std::vector<int> later;
        for (int pos : k_w) {
            if (pos > z) later.push_back(pos);
        }
        seq = unshift_left(std::move(seq), z, later);
        snapshot(trace, "Unshifting Non-Excedance-Letters", seq, later);
    }

    Permutation sigma(std::move(seq));
    const int c = gap_level_den(w, g, h) - gap_level_den(sigma, g, h);

    std::vector<int> exclp;
    for (int i = 1; i < n; ++i) {
        if (sigma.at(i) >= i + g && sigma.at(i) >= h) {
            exclp.push_back(i);
            trace.exc_letters.push_back(sigma.at(i));
        } else {
            trace.nonexc_positions.push_back(i);
        }
    }
    std::sort(trace.exc_letters.begin(), trace.exc_letters.end());
    trace.s = static_cast<int>(trace.exc_letters.size());
    if (trace.case_tag == MapCase::case2) {
        trace.d = trace.s + g - c;
    } else if (trace.case_tag == MapCase::case3) {
        trace.d = c - trace.s - g + 1;
        int u = 0;
        for (int i : exclp) {
            if (i < z) ++u;
        }
        trace.u = u;
        trace.v = trace.s - u;
    }
    return {std::move(sigma), c, std::move(trace)};
}

std::string format_trace(const BijectionTrace& trace) {
    std::ostringstream os;
    os << to_string(trace.case_tag) << " (s=" << trace.s;
    if (trace.case_tag != MapCase::case1) os << ", d=" << trace.d;
    if (trace.case_tag == MapCase::case2) os << ", p=" << trace.p;
    if (trace.z) os << ", z=" << *trace.z;
    if (trace.a) os << ", a=" << *trace.a;
    if (trace.u) os << ", u=" << *trace.u << ", v=" << *trace.v;
    os << ")\n";
    size_t width = 0;
    for (const auto& step : trace.steps) width = std::max(width, step.name.size());
    for (const auto& step : trace.steps) {
        os << "  " << step.name << ":";
        for (size_t i = step.name.size(); i < width; ++i) os << ' ';
        for (int v : step.sequence) {
            os << ' ';
            if (v == kHole) {
                os << '*';
            } else {
                os << v;
            }
        }
        if (!step.highlights.empty()) {
            os << "   (positions";
            for (int pos : step.highlights) os << ' ' << pos;
            os << ')';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace denstat
