#pragma once

#include "tapoly/word.hpp"

#include <vector>

namespace tapoly {

// Finitely presented group <x_1..x_u | r_1..r_v>, generators as 0-based
// indices.  Names belong to the text formats, not to the presentation.
struct GroupPresentation {
    int gen_count = 0;
    std::vector<Word> relators;

    void validate() const;
};

// Homomorphism given on generators: one target word per source generator.
// Whether it is a verified homomorphism is a separate certificate produced
// by the order module.
struct GroupHom {
    GroupPresentation source;
    GroupPresentation target;
    std::vector<Word> images;

    void validate() const;
};

Word substitute(const std::vector<Word>& images, const Word& w);
Word substitute(const GroupHom& h, const Word& w);

} // namespace tapoly
