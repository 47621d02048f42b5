#include "tapoly/word.hpp"

#include <sstream>

namespace tapoly {

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter l : letters) {
        if (l == 0) throw error("invalid letter 0");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    return Word(free_reduce(letters));
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> cat = ls_;
    cat.insert(cat.end(), o.ls_.begin(), o.ls_.end());
    return Word(free_reduce(cat));
}

Word Word::inverse() const {
    std::vector<Letter> inv(ls_.rbegin(), ls_.rend());
    for (Letter& l : inv) l = -l;
    return Word(std::move(inv));
}

Word Word::pow(int n) const {
    Word base = n < 0 ? inverse() : *this;
    int k = n < 0 ? -n : n;
    Word r;
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

int Word::exponent_sum() const {
    int s = 0;
    for (Letter l : ls_) s += letter_sign(l);
    return s;
}

int Word::max_gen_index() const {
    int m = -1;
    for (Letter l : ls_) m = std::max(m, letter_gen(l));
    return m;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.is_identity()) return "1";
    std::ostringstream out;
    bool first = true;
    for (Letter l : w.letters()) {
        int g = letter_gen(l);
        if (g >= static_cast<int>(names.size())) throw error("generator index out of range for name table");
        if (!first) out << " ";
        out << names[g];
        if (letter_sign(l) < 0) out << "^-1";
        first = false;
    }
    return out.str();
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
        if (tok == "1" && letters.empty()) continue; // identity marker
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        int gen = -1;
        for (size_t i = 0; i < names.size(); ++i) {
            if (names[i] == tok) {
                gen = static_cast<int>(i);
                break;
            }
        }
        if (gen < 0) throw error("unknown generator name '" + tok + "'");
        letters.push_back(make_letter(gen, sign));
    }
    return Word::from_letters(letters);
}

std::vector<std::string> default_names(int count, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 0; i < count; ++i) names.push_back(stem + std::to_string(i + 1));
    return names;
}

} // namespace tapoly
