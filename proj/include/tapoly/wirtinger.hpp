#pragma once

#include "tapoly/pd.hpp"
#include "tapoly/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tapoly {

// Presentation of a knot group with its peripheral data: u generators
// (one per arc), u-1 conjugation relators, a meridian, and (when known)
// a longitude with exponent sum zero.
struct WirtingerData {
    std::string name;
    GroupPresentation pres;
    std::vector<std::string> gen_names;
    Word meridian;
    std::optional<Word> longitude;
};

// Checks the structural invariants: relators of conjugation shape
// W y W^-1 z^-1, meridian exponent sum 1, longitude exponent sum 0, and
// abelianization of rank exactly 1 (relator exponent matrix has rank u-1).
void validate(const WirtingerData& w);

// Wirtinger presentation of a diagram: one generator per arc, one relator
// per crossing with the relator of crossing `dropped` omitted (default:
// the last).  The longitude collects the over-arc generator, signed by the
// crossing sign, at each under-passage starting from arc 1, and is
// writhe-corrected by a power of the meridian.
WirtingerData wirtinger(const KnotDiagram& d, const std::string& name = "", int dropped = -1);

// Two-generator presentation <a,b | w a w^-1 b^-1> of the 2-bridge knot
// with fraction p/q, where w = a^e1 b^e2 ... b^e_{p-1}, e_i = (-1)^[iq/p].
// No longitude is attached.
WirtingerData two_bridge(i64 p, i64 q, const std::string& name);

// presentation file format (round-trips exactly):
//   name: 3_1
//   gens: x1 x2 x3
//   rel: x3 x1 x3^-1 x2^-1
//   meridian: x1
//   longitude: ...
std::string presentation_to_string(const WirtingerData& w);
WirtingerData parse_presentation(const std::string& text);

// PD file format: one knot per line, "name: X[a,b,c,d] X[...] ..."
std::vector<std::pair<std::string, KnotDiagram>> parse_pd_file(const std::string& text);
std::string pd_file_to_string(const std::vector<std::pair<std::string, KnotDiagram>>& knots);

} // namespace tapoly
