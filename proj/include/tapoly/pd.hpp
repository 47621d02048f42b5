#pragma once

#include "tapoly/fp.hpp"

#include <array>
#include <string>
#include <vector>

namespace tapoly {

enum class PdErrorKind { syntax, multiplicity, multicomponent };

struct pd_error : error {
    PdErrorKind kind;
    pd_error(PdErrorKind k, const std::string& msg) : error(msg), kind(k) {}
};

// One crossing X[a,b,c,d]: edge labels counterclockwise starting from the
// incoming under-strand.  sign is inferred from the over-strand direction:
// +1 when the over-strand runs d->b, -1 when it runs b->d.
struct PdCrossing {
    std::array<int, 4> e{};
    int sign = 0;

    int under_in() const { return e[0]; }
    int under_out() const { return e[2]; }
    int over_in() const { return sign > 0 ? e[3] : e[1]; }
    int over_out() const { return sign > 0 ? e[1] : e[3]; }
};

// Validated single-component diagram: n crossings, 2n edges labeled 1..2n
// along the orientation.
struct KnotDiagram {
    std::vector<PdCrossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int writhe() const;
};

// Parses a PD code such as "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]" and validates
// it: every label appears exactly twice, under-strands advance by one, and
// the code traces out a single component.
KnotDiagram parse_pd(const std::string& text);

std::string pd_to_string(const KnotDiagram& d);

} // namespace tapoly
