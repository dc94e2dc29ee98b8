#include "denstat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace denstat {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
    const int n = static_cast<int>(letters_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : letters_) {
        if (v < 1 || v > n) {
            throw invalid_input_error("letter '" + std::to_string(v) +
                                      "' out of range for a permutation of length " +
                                      std::to_string(n));
        }
        if (seen[static_cast<size_t>(v)]) {
            throw invalid_input_error("duplicate letter '" + std::to_string(v) +
                                      "' in permutation");
        }
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> letters(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) letters[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(letters));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> letters;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\n' ||
            text[i] == '\r') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != ',' &&
               text[j] != '\n' && text[j] != '\r') {
            ++j;
        }
        std::string_view tok = text.substr(i, j - i);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1) {
            throw invalid_input_error("invalid permutation token '" + std::string(tok) +
                                      "'");
        }
        letters.push_back(value);
        i = j;
    }
    return Permutation(std::move(letters));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << letters_[i];
    }
    return os.str();
}

int inv_count(std::span<const int> word) {
    const size_t n = word.size();
    int count = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (word[i] == word[j]) {
                throw invalid_input_error("duplicate entry '" + std::to_string(word[i]) +
                                          "' in word");
            }
            if (word[i] > word[j]) ++count;
        }
    }
    return count;
}

}  // namespace denstat
