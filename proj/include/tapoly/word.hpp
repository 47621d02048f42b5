#pragma once

#include "tapoly/fp.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tapoly {

// A letter is a signed generator: +(i+1) for generator i, -(i+1) for its
// inverse.  A Word is a freely reduced sequence of letters; the empty word
// is the identity.
using Letter = int;

inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int letter_sign(Letter l) { return l > 0 ? 1 : -1; }
inline Letter make_letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }

class Word {
public:
    Word() = default;

    static Word gen(int index, int sign = 1) { return Word(std::vector<Letter>{make_letter(index, sign)}); }
    static Word from_letters(const std::vector<Letter>& letters);

    const std::vector<Letter>& letters() const { return ls_; }
    bool is_identity() const { return ls_.empty(); }
    size_t length() const { return ls_.size(); }

    Word operator*(const Word& o) const;
    Word inverse() const;
    Word pow(int n) const;

    int exponent_sum() const;
    int max_gen_index() const; // -1 for the identity

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    explicit Word(std::vector<Letter> reduced) : ls_(std::move(reduced)) {}

    std::vector<Letter> ls_;
};

// free reduction of a raw letter sequence; idempotent
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

// text form: juxtaposed generator names with ^-1 for inverses
std::string word_to_string(const Word& w, const std::vector<std::string>& names);
Word parse_word(const std::string& text, const std::vector<std::string>& names);

// default generator names x1..xu
std::vector<std::string> default_names(int count, const std::string& stem = "x");

} // namespace tapoly
