#pragma once

#include "tapoly/knot_table.hpp"
#include "tapoly/rewrite.hpp"
#include "tapoly/twisted.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tapoly {

enum class OrderKind { no_surjection, surjection_verified, inconclusive };

std::string to_string(OrderKind k);

// evidence for a no-surjection verdict: one target representation whose
// pair defeats every source pair
struct DefeatedPair {
    TAPair pair;
    std::string reason; // "not-divisible" | "denominator-mismatch"
};

struct NoSurjEvidence {
    std::string source, target;
    i64 p = 0;
    bool classical_only = false;
    LaurentPoly alex_source{Ring::integers()};
    LaurentPoly alex_target{Ring::integers()};
    std::optional<Rep2> witness;
    std::optional<TAPair> witness_pair;
    std::vector<DefeatedPair> source_pairs;
};

struct OrderVerdict {
    OrderKind kind = OrderKind::inconclusive;
    std::string report; // human-readable transcript
    std::optional<NoSurjEvidence> evidence;
};

// homomorphism between two stored knots, with optional surjectivity
// witness words per target generator
struct HomCase {
    WirtingerData source, target;
    std::vector<Word> images;
    std::map<int, Word> witnesses; // target gen -> word over source gens
    bool verified = false;
};

// hom file format:
//   source: 8_5
//   target: 3_1
//   y1 -> x3
//   ...
//   witness: x2 <- y2
using KnotResolver = std::function<WirtingerData(const std::string&)>;
HomCase parse_hom_file(const std::string& text, const KnotResolver& resolve);
HomCase identity_hom(const WirtingerData& k);

// Certifies that the map is a homomorphism (every source relator image is
// trivial in the target) and surjective (every target generator appears
// verbatim among the images or has a certified witness word).  Never
// returns a false positive: unknown triviality yields `inconclusive`.
OrderVerdict verify_surjection(HomCase& h, const WordProblem& target_words);
OrderVerdict verify_surjection(HomCase& h);

struct NoSurjOptions {
    // The criterion quantifies over representations on both sides; the
    // default takes all of them (the restriction to nonabelian ones is
    // also sound, both sides restricted together, and cheaper).
    bool nonabelian_only = false;
};

// Divisibility criterion for the non-existence of a surjection
// G(K1) ->> G(K2): classical pre-filter on Alexander polynomials over the
// integers, then a search for a target representation whose pair defeats
// every source pair over F_p.
OrderVerdict no_surjection_certificate(const WirtingerData& k1, const WirtingerData& k2, i64 p,
                                       NoSurjOptions opts = {});

std::string certificate_to_string(const NoSurjEvidence& e);

// Re-checks a stored certificate: the witness representation must satisfy
// the target relators, reproduce the stated pair, and defeat every listed
// source pair.
bool verify_certificate(const std::string& text, const KnotResolver& resolve, std::string* why = nullptr);

// peripheral image phi(l1) = m2^a l2^b of a verified homomorphism
struct PeripheralImage {
    i64 a = 0;
    i64 b = 0;
    bool solved = false;

    bool degree_one() const { return solved && (b == 1 || b == -1); }
};

PeripheralImage peripheral_image(const HomCase& h, const WordProblem& target_words, int bound = 8);
PeripheralImage peripheral_image(const HomCase& h, int bound = 8);

} // namespace tapoly
