#pragma once

#include "tapoly/presentation.hpp"
#include "tapoly/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tapoly {

struct RewriteRule {
    std::vector<Letter> lhs, rhs; // lhs > rhs in shortlex
};

struct KbLimits {
    int max_rules = 4000;
    int max_word_len = 120;
    double seconds = 10.0;
};

// String rewriting system over the letters of a group presentation,
// oriented by a weighted shortlex order (total letter weight, then length,
// then lexicographic rank; unit weights give plain shortlex).  When
// `complete` is set, completion reached a confluent system and normal forms
// decide the word problem.
class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(int gen_count, std::vector<int> letter_rank, std::vector<int> letter_weight = {});
    RewriteSystem(int gen_count, std::vector<int> letter_rank, std::vector<int> letter_weight,
                  std::vector<RewriteRule> rules, bool complete);

    int gen_count() const { return gen_count_; }
    bool complete() const { return complete_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    bool word_less(const std::vector<Letter>& a, const std::vector<Letter>& b) const;

    std::vector<Letter> normal_form(const std::vector<Letter>& w) const;
    Word normal_form(const Word& w) const;

private:
    int rank_of(Letter l) const;
    void rebuild_index() const;

    int gen_count_ = 0;
    std::vector<int> letter_rank_;   // by letter id = gen*2 + (sign < 0)
    std::vector<int> letter_weight_; // positive; all 1 = shortlex
    std::vector<RewriteRule> rules_;
    bool complete_ = false;

    mutable std::vector<std::vector<int>> by_last_; // rule indices by last lhs letter id
    mutable bool index_dirty_ = true;
};

// Knuth-Bendix completion under the weighted shortlex order.  Resource
// limits produce a partial (non-complete) system, not an error.
// letter_order, when given, lists the 2u letter ids from smallest to
// largest; letter_weights are per letter id and default to 1.
RewriteSystem kb_complete(const GroupPresentation& g, KbLimits limits = {},
                          const std::vector<int>* letter_order = nullptr,
                          const std::vector<int>* letter_weights = nullptr);

// tries a few letter orders and returns the first complete system
// (or the last partial one)
RewriteSystem kb_complete_auto(const GroupPresentation& g, KbLimits limits = {});

enum class Triviality { trivial, nontrivial, unknown };

std::string to_string(Triviality t);

// Verdict from rewriting alone: Trivial when the normal form is empty
// (sound for any rule set derived from the relators), Nontrivial when the
// system is complete and the normal form is not empty, Unknown otherwise.
Triviality word_is_trivial(const Word& w, const RewriteSystem& rs);

// Word-problem helper for a knot group.  Strategy:
//   1. Knuth-Bendix on the given presentation; a complete system decides.
//   2. Otherwise, for trefoil-like groups, transport through a certified
//      isomorphism onto H = <c,d,z | c^2 = z, d^3 = z>, whose shortlex
//      completion is finite.  The certificate is checked by rewriting
//      alone: the forward map kills every relator in H's complete system,
//      the backward map kills H's relators in the (partial, still sound)
//      system for the input, and the round trip fixes every generator.
//   3. Otherwise partial rewriting gives sound Trivial answers and stored
//      SL(2,F_p) representations (p in {2,3,5}) give sound Nontrivial
//      refutations; the rest is Unknown.
class WordProblem {
public:
    // direct completion rarely succeeds on knot groups, so the default
    // budget is small before falling through to the transport strategy
    explicit WordProblem(const WirtingerData& w, KbLimits limits = KbLimits{4000, 120, 2.0});

    const WirtingerData& data() const { return data_; }
    const RewriteSystem& system() const { return rs_; }

    // true when the word problem is decided (directly or via transport)
    bool decisive() const { return rs_.complete() || transported_; }
    std::string description() const;

    Triviality is_trivial(const Word& w) const;
    bool equal(const Word& a, const Word& b) const; // sound when it says yes

    // group elements as words over the input generators, breadth-first,
    // deduplicated by the best available normal form
    std::vector<Word> elements(int max_len, size_t cap = 100000) const;

private:
    Word canonical_key(const Word& w) const;
    void try_torus_transport();

    WirtingerData data_;
    RewriteSystem rs_;
    std::vector<Rep2> refuters_;

    bool transported_ = false;
    GroupPresentation torus_;
    RewriteSystem torus_rs_;
    std::vector<Word> forward_; // generator images in the torus presentation
};

} // namespace tapoly
