#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace denstat {

// Thrown when an input value is malformed (bad token, duplicate letter, ...).
struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a parameter is outside its documented domain (c out of range,
// h > n, ...).
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A permutation of {1,...,n} in one-line notation. Positions and letters are
// 1-based everywhere in the public interface; n = 0 (the empty permutation)
// is valid.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> letters);
    Permutation(std::initializer_list<int> letters)
        : Permutation(std::vector<int>(letters)) {}

    static Permutation identity(int n);

    // Accepts comma- or whitespace-separated positive integers, e.g.
    // "7 1 5 4 9 2 6 3 8" or "7,1,5,4,9,2,6,3,8". Throws invalid_input_error
    // naming the offending token.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    // Letter at 1-based position i.
    int at(int pos) const { return letters_[static_cast<size_t>(pos) - 1]; }

    const std::vector<int>& letters() const { return letters_; }

    // Space-separated one-line notation; "" for the empty permutation.
    std::string str() const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> letters_;
};

// Number of inversions of a word with distinct entries (not necessarily a
// permutation; subsequences of permutations are fine). Throws
// invalid_input_error on duplicates. Plain pair scan; the words here are
// tiny, so O(n^2) beats a merge count.
int inv_count(std::span<const int> word);

inline int inv_count(const Permutation& p) { return inv_count(p.letters()); }

}  // namespace denstat
