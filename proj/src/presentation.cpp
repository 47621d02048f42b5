#include "tapoly/presentation.hpp"

namespace tapoly {

void GroupPresentation::validate() const {
    if (gen_count < 0) throw error("negative generator count");
    for (const Word& r : relators)
        if (r.max_gen_index() >= gen_count)
            throw error("relator references generator index out of range");
}

void GroupHom::validate() const {
    source.validate();
    target.validate();
    if (static_cast<int>(images.size()) != source.gen_count)
        throw error("homomorphism image count does not match source generator count");
    for (const Word& w : images)
        if (w.max_gen_index() >= target.gen_count)
            throw error("homomorphism image references generator out of range");
}

Word substitute(const std::vector<Word>& images, const Word& w) {
    Word out;
    for (Letter l : w.letters()) {
        int g = letter_gen(l);
        if (g >= static_cast<int>(images.size())) throw error("substitute: generator index out of range");
        out = out * (letter_sign(l) > 0 ? images[g] : images[g].inverse());
    }
    return out;
}

Word substitute(const GroupHom& h, const Word& w) {
    return substitute(h.images, w);
}

} // namespace tapoly
