#pragma once

#include "tapoly/fox.hpp"
#include "tapoly/polymat.hpp"
#include "tapoly/reps.hpp"
#include "tapoly/wirtinger.hpp"

#include <string>
#include <vector>

namespace tapoly {

// Numerator/denominator value of the twisted Alexander polynomial of a
// knot group for one SL(2,F_p) representation.  The numerator is stored in
// canonical form; the denominator is det(t rho(x_j) - E) = t^2 - tr t + 1
// exactly as computed.
struct TAPair {
    LaurentPoly num;
    LaurentPoly den;
    i64 p = 2;
    std::string knot;
    std::string rep_id;
};

bool pair_equal(const TAPair& a, const TAPair& b);  // canonical num, exact den
bool pair_less(const TAPair& a, const TAPair& b);   // deterministic table order
std::string pair_to_string(const TAPair& t);

// Phi = (rho tensor t^exponent-sum) extended linearly to the group ring;
// the result is a 2x2 matrix over F_p[t^{+-1}].
PolyMatrix phi(const GroupRingElem& e, const Rep2& r);

// the (u-1) x u block Alexander matrix, as a 2(u-1) x 2u scalar matrix
PolyMatrix alexander_matrix(const GroupPresentation& g, const Rep2& r);

// deficiency-one twisted pair: numerator = det of the Alexander matrix with
// block column `removed_col` deleted, denominator = det Phi(x_j - 1)
TAPair twisted_pair(const WirtingerData& w, const Rep2& r, int removed_col = 0);

// general presentations: numerator = gcd over all maximal minors of the
// column-deleted matrix.  Throws if det Phi(x_j - 1) = 0.
TAPair twisted_general(const GroupPresentation& g, const Rep2& r, int removed_col);

// classical Alexander polynomial (n = 1, trivial representation), canonical
// over the integers
LaurentPoly classical_alexander(const GroupPresentation& g, int removed_col = 0);
LaurentPoly classical_alexander(const WirtingerData& w);

// deduplicated, sorted table of twisted pairs over all enumerated
// representations
std::vector<TAPair> twisted_pair_table(const WirtingerData& w, i64 p, RepEnumOptions opts = {});

} // namespace tapoly
