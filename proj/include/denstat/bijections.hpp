#pragma once

#include <optional>
#include <string>
#include <vector>

#include "denstat/permutation.hpp"

namespace denstat {

enum class MapCase { case1, case2, case3 };

std::string to_string(MapCase c);

// One snapshot of the working sequence. A 0 entry is the hole left while a
// letter is being relocated (printed as '*').
struct TraceStep {
    std::string name;
    std::vector<int> sequence;
    std::vector<int> highlights;  // 1-based positions touched by the step
};

// Every quantity the constructions name: s, t, d, e_i, k_i, e_{j_i}, x, y,
// p, and the inverse-side z, a, u, v. t and x are the sizes of
// nonexc_positions and chain_letters.
struct BijectionTrace {
    MapCase case_tag = MapCase::case1;
    int s = 0;                         // number of excedance-letters e_1..e_s
    int d = 0;                         // case-derived index
    std::vector<int> exc_letters;      // e_1 < ... < e_s
    std::vector<int> nonexc_positions; // k_1 < ... < k_t (k_{t+1} = n by convention)
    std::vector<int> chain_letters;    // e_{j_1} < ... < e_{j_x} (Case 2)
    int y = 0;                         // first shifted non-excedance index (Case 2)
    int p = 0;                         // pivot position e_d - g + 1 (Case 2)
    std::vector<TraceStep> steps;      // initial snapshot plus one per step
    std::optional<int> z;              // position of letter n in the image
    std::optional<int> a;              // rightmost critical letter value (inverse)
    std::optional<int> u, v;           // excedance-letters left/right of k_d (Case 3)
};

struct ApplyResult {
    Permutation image;
    BijectionTrace trace;
};

struct InvertResult {
    Permutation preimage;
    int c = 0;
    BijectionTrace trace;
};

// ---------------------------------------------------------------------------
// The insertion map sending (sigma, c) in S_{n-1} x {0..n-1} to S_n with
// Exc preserved (or grown by one non-excedance of sigma) and
// den(image) = den(sigma) + c. Throws range_error for c outside [0, n-1].
// ---------------------------------------------------------------------------
ApplyResult phi_den(const Permutation& sigma, int c);

// Positions i with w_i <= i whose whole interval [w_i, i) consists of
// excedances of w. Never empty for n >= 1.
std::vector<int> critical_nonexc_positions(const Permutation& w);

// Total inverse of phi_den; recovers c as den(w) - den(sigma).
InvertResult phi_den_inverse(const Permutation& w);

// ---------------------------------------------------------------------------
// The g-gap h-level extension: gExclp_h is preserved (or grown by one) and
// gden_h(image) = gden_h(sigma) + c. Requires 1 <= h <= n and g >= 1.
// ---------------------------------------------------------------------------
ApplyResult phi_gh_den(int g, int h, const Permutation& sigma, int c);

// Positions i with w_i < i + g such that every valid position in
// [w_i - g + 1, i) is a g-gap excedance of w. Coincides with
// critical_nonexc_positions at g = 1. Never empty for n >= 1.
std::vector<int> critical_gap_nonexc_positions(int g, const Permutation& w);

InvertResult phi_gh_den_inverse(int g, int h, const Permutation& w);

// Text rendering of a trace: one labeled block per snapshot, holes as '*'.
std::string format_trace(const BijectionTrace& trace);

}  // namespace denstat
