#pragma once

#include <string>
#include <vector>

namespace tap {

struct Letter {
    int gen;
    int sign;  // +1 or -1
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in the generators. Construct via free_reduce.
using Word = std::vector<Letter>;

Word free_reduce(const Word& raw);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
/// g w g^-1 for a single letter g.
Word word_conjugate(const Word& w, const Letter& g);
long exponent_sum(const Word& w, int gen);
long total_exponent(const Word& w);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;  // stored freely reduced

    int num_generators() const { return static_cast<int>(generators.size()); }
    void validate() const;  // distinct names, letter indices in range
    bool operator==(const Presentation&) const = default;
};

std::string word_str(const Word& w, const std::vector<std::string>& names);

}  // namespace tap
