#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "denstat/permutation.hpp"

namespace denstat {

// ---------------------------------------------------------------------------
// The g-gap h-level engine.
//
// Position i of sigma is a g-gap excedance if sigma_i >= i + g. The letter
// sigma_i is a g-gap h-level excedance-letter if additionally sigma_i >= h;
// the g-gap l-level excedances add the position condition i >= l instead.
// Every statistic below is a specialization: den = (g=1,h=1), rden = (g=r,
// h=1), den_r = (g=1,h=r), exc = (g=1,l=1), rexc = (g=r,l=1), exc_r =
// (g=1,l=r). Parameters beyond n are allowed and degenerate (empty sets,
// den -> inv).
// ---------------------------------------------------------------------------

struct GapLevelProfile {
    std::vector<int> exclp_positions;  // {i : sigma_i >= i+g, sigma_i >= h}
    std::vector<int> excl_letters;     // letters at exclp positions, in sigma order
    std::vector<int> nexcl_letters;    // the remaining letters, in sigma order
    std::vector<int> exc_positions;    // {i : sigma_i >= i+g, i >= level_exc}
};

GapLevelProfile gap_level_profile(const Permutation& sigma, int gap, int level_exc,
                                  int level_letter);

// gden_h: sum of (i+g-1) over the excedance-letter positions, plus the
// inversions inside each of the two letter subsequences.
int gap_level_den(const Permutation& sigma, int gap, int level_letter);

// |{i : sigma_i >= i+g, i >= level}|
int gap_level_exc_count(const Permutation& sigma, int gap, int level);

// Splits [1, level-1] against the excedance-letter positions:
// A = {i in exclp : i <= level-1}, B = [level-1] \ A.
std::pair<std::vector<int>, std::vector<int>> level_split(const Permutation& sigma,
                                                          int gap, int level_letter,
                                                          int level);

struct DescentProfile {
    std::vector<int> rdes_positions;  // {i < n : sigma_i >= sigma_{i+1} + r}
    int rdes = 0;
    int rinv = 0;  // |{(i,j) in Inv : sigma_i < sigma_j + r}|
    int rmaj = 0;  // sum of rdes positions + rinv
};

DescentProfile descent_profile(const Permutation& sigma, int r);

// ---------------------------------------------------------------------------
// Named statistic descriptors.
// ---------------------------------------------------------------------------

enum class StatFamily {
    gap_descent_count,   // rdes (des at r=1)
    gap_major,           // rmaj (maj at r=1)
    gap_level_exc_count, // gexc_l (exc, rexc, exc_l)
    gap_level_den,       // gden_h (den, rden, den_h)
    inv_count,
    zero,
};

struct StatDescriptor {
    StatFamily family = StatFamily::zero;
    int gap = 1;    // g
    int level = 1;  // l for gap_level_exc_count, h for gap_level_den
    int r = 1;      // gap for the descent-side statistics

    static StatDescriptor des() { return {StatFamily::gap_descent_count, 1, 1, 1}; }
    static StatDescriptor maj() { return {StatFamily::gap_major, 1, 1, 1}; }
    static StatDescriptor inv() { return {StatFamily::inv_count, 1, 1, 1}; }
    static StatDescriptor zero_stat() { return {StatFamily::zero, 1, 1, 1}; }
    static StatDescriptor rdes(int r) { return {StatFamily::gap_descent_count, 1, 1, r}; }
    static StatDescriptor rmaj(int r) { return {StatFamily::gap_major, 1, 1, r}; }
    static StatDescriptor exc() { return gap_exc(1, 1); }
    static StatDescriptor den() { return gap_den(1, 1); }
    static StatDescriptor rexc(int r) { return gap_exc(r, 1); }
    static StatDescriptor rden(int r) { return gap_den(r, 1); }
    static StatDescriptor exc_level(int l) { return gap_exc(1, l); }
    static StatDescriptor den_level(int h) { return gap_den(1, h); }
    static StatDescriptor gap_exc(int g, int l) {
        return {StatFamily::gap_level_exc_count, g, l, 1};
    }
    static StatDescriptor gap_den(int g, int h) {
        return {StatFamily::gap_level_den, g, h, 1};
    }

    // Text format: name[:param=value,...] with names des, maj, inv, exc, den,
    // rdes, rmaj, rexc, rden, exc_l, den_h, gexc, gden, zero.
    // Examples: "gden:g=2,h=3", "exc_l:l=3", "rmaj:r=2".
    static StatDescriptor parse(std::string_view text);

    // Canonical short name, round-trips through parse().
    std::string str() const;

    bool operator==(const StatDescriptor&) const = default;
};

int eval_stat(const StatDescriptor& d, const Permutation& sigma);

}  // namespace denstat
