#include "tapoly/rewrite.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <set>

namespace tapoly {

namespace {

int letter_id(Letter l) { return letter_gen(l) * 2 + (letter_sign(l) < 0 ? 1 : 0); }

} // namespace

RewriteSystem::RewriteSystem(int gen_count, std::vector<int> letter_rank, std::vector<int> letter_weight)
    : gen_count_(gen_count), letter_rank_(std::move(letter_rank)), letter_weight_(std::move(letter_weight)) {
    if (static_cast<int>(letter_rank_.size()) != 2 * gen_count_) throw error("letter rank table size mismatch");
    if (letter_weight_.empty()) letter_weight_.assign(2 * gen_count_, 1);
    if (static_cast<int>(letter_weight_.size()) != 2 * gen_count_) throw error("letter weight table size mismatch");
    for (int w : letter_weight_)
        if (w <= 0) throw error("letter weights must be positive");
}

RewriteSystem::RewriteSystem(int gen_count, std::vector<int> letter_rank, std::vector<int> letter_weight,
                             std::vector<RewriteRule> rules, bool complete)
    : RewriteSystem(gen_count, std::move(letter_rank), std::move(letter_weight)) {
    rules_ = std::move(rules);
    complete_ = complete;
}

int RewriteSystem::rank_of(Letter l) const { return letter_rank_[letter_id(l)]; }

bool RewriteSystem::word_less(const std::vector<Letter>& a, const std::vector<Letter>& b) const {
    long wa = 0, wb = 0;
    for (Letter l : a) wa += letter_weight_[letter_id(l)];
    for (Letter l : b) wb += letter_weight_[letter_id(l)];
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return rank_of(a[i]) < rank_of(b[i]);
    return false;
}

void RewriteSystem::rebuild_index() const {
    by_last_.assign(2 * gen_count_, {});
    for (size_t i = 0; i < rules_.size(); ++i)
        by_last_[letter_id(rules_[i].lhs.back())].push_back(static_cast<int>(i));
    index_dirty_ = false;
}

std::vector<Letter> RewriteSystem::normal_form(const std::vector<Letter>& w) const {
    if (index_dirty_) rebuild_index();
    std::vector<Letter> out;
    out.reserve(w.size());
    std::vector<Letter> pending(w.rbegin(), w.rend());
    // invariant: out is irreducible before each push, so any redex created by
    // a push ends at the new last letter; replaced text re-enters via pending
    while (!pending.empty()) {
        Letter next = pending.back();
        pending.pop_back();
        if (letter_gen(next) >= gen_count_) throw error("normal_form: letter out of range");
        out.push_back(next);
        for (int ri : by_last_[letter_id(out.back())]) {
            const RewriteRule& r = rules_[ri];
            if (r.lhs.size() > out.size()) continue;
            if (!std::equal(r.lhs.begin(), r.lhs.end(), out.end() - r.lhs.size())) continue;
            out.resize(out.size() - r.lhs.size());
            pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
            break;
        }
    }
    return out;
}

Word RewriteSystem::normal_form(const Word& w) const {
    return Word::from_letters(normal_form(w.letters()));
}

// ---- completion ----------------------------------------------------------

namespace {

using Letters = std::vector<Letter>;

struct Completion {
    int gen_count = 0;
    std::vector<int> rank;   // by letter id
    std::vector<int> weight; // by letter id

    struct IdRule {
        Letters lhs, rhs;
        bool alive = true;
    };
    std::vector<IdRule> rules;               // ids never reused
    std::vector<std::vector<int>> by_last;   // letter id -> rule ids (may contain dead)

    struct Task {
        size_t size;
        int i, j;
        bool operator>(const Task& o) const { return size > o.size; }
    };
    std::priority_queue<Task, std::vector<Task>, std::greater<Task>> pair_queue;
    std::deque<std::pair<Letters, Letters>> equations;

    KbLimits limits;
    std::chrono::steady_clock::time_point start;
    bool overflowed = false;
    int alive_count = 0;

    bool word_less(const Letters& a, const Letters& b) const {
        long wa = 0, wb = 0;
        for (Letter l : a) wa += weight[letter_id(l)];
        for (Letter l : b) wb += weight[letter_id(l)];
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return rank[letter_id(a[i])] < rank[letter_id(b[i])];
        return false;
    }

    Letters nf(const Letters& w) const {
        Letters out;
        out.reserve(w.size());
        Letters pending(w.rbegin(), w.rend());
        while (!pending.empty()) {
            out.push_back(pending.back());
            pending.pop_back();
            for (int ri : by_last[letter_id(out.back())]) {
                const IdRule& r = rules[ri];
                if (!r.alive || r.lhs.size() > out.size()) continue;
                if (!std::equal(r.lhs.begin(), r.lhs.end(), out.end() - r.lhs.size())) continue;
                out.resize(out.size() - r.lhs.size());
                pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
                break;
            }
        }
        return out;
    }

    bool out_of_time() const {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return elapsed > limits.seconds;
    }

    void install(Letters lhs, Letters rhs) {
        if (static_cast<int>(lhs.size()) > limits.max_word_len) {
            overflowed = true;
            return;
        }
        int id = static_cast<int>(rules.size());
        rules.push_back(IdRule{std::move(lhs), std::move(rhs), true});
        ++alive_count;
        if (alive_count > limits.max_rules) overflowed = true;
        const IdRule& nr = rules[id];
        by_last[letter_id(nr.lhs.back())].push_back(id);

        // retire rules whose lhs the new rule reduces; requeue them as equations
        for (int i = 0; i < id; ++i) {
            IdRule& r = rules[i];
            if (!r.alive || r.lhs.size() < nr.lhs.size()) continue;
            bool reducible = false;
            for (size_t k = 0; !reducible && k + nr.lhs.size() <= r.lhs.size(); ++k)
                reducible = std::equal(nr.lhs.begin(), nr.lhs.end(), r.lhs.begin() + k);
            if (reducible) {
                r.alive = false;
                --alive_count;
                equations.emplace_back(r.lhs, r.rhs);
            }
        }
        for (int i = 0; i <= id; ++i)
            if (rules[i].alive)
                pair_queue.push(Task{rules[i].lhs.size() + nr.lhs.size(), i, id});
    }

    void process_equation(const Letters& a, const Letters& b) {
        Letters na = nf(a), nb = nf(b);
        if (na == nb) return;
        if (word_less(na, nb)) std::swap(na, nb);
        install(std::move(na), std::move(nb));
    }

    // critical pairs of the ordered rule pair (i, j), both directions of
    // overlap plus containments
    void superpose(int i, int j) {
        auto both = [&](int x, int y) {
            const Letters& l1 = rules[x].lhs;
            const Letters& r1 = rules[x].rhs;
            const Letters& l2 = rules[y].lhs;
            const Letters& r2 = rules[y].rhs;
            size_t maxo = std::min(l1.size(), l2.size()) - 1;
            for (size_t o = 1; o <= maxo; ++o) {
                if (!std::equal(l2.begin(), l2.begin() + o, l1.end() - o)) continue;
                Letters left = r1;
                left.insert(left.end(), l2.begin() + o, l2.end());
                Letters right(l1.begin(), l1.end() - o);
                right.insert(right.end(), r2.begin(), r2.end());
                equations.emplace_back(std::move(left), std::move(right));
            }
            if (l2.size() < l1.size()) {
                for (size_t k = 0; k + l2.size() <= l1.size(); ++k) {
                    if (!std::equal(l2.begin(), l2.end(), l1.begin() + k)) continue;
                    Letters right(l1.begin(), l1.begin() + k);
                    right.insert(right.end(), r2.begin(), r2.end());
                    right.insert(right.end(), l1.begin() + k + l2.size(), l1.end());
                    equations.emplace_back(r1, std::move(right));
                }
            }
        };
        both(i, j);
        if (i != j) both(j, i);
    }

    RewriteSystem finish(bool complete) const {
        std::vector<RewriteRule> out;
        for (const IdRule& r : rules)
            if (r.alive) out.push_back(RewriteRule{r.lhs, r.rhs});
        return RewriteSystem(gen_count, rank, weight, std::move(out), complete && !overflowed);
    }
};

} // namespace

RewriteSystem kb_complete(const GroupPresentation& g, KbLimits limits, const std::vector<int>* letter_order,
                          const std::vector<int>* letter_weights) {
    g.validate();
    const int nletters = 2 * g.gen_count;
    std::vector<int> rank(nletters);
    if (letter_order) {
        if (static_cast<int>(letter_order->size()) != nletters) throw error("letter order size mismatch");
        for (int pos = 0; pos < nletters; ++pos) rank[(*letter_order)[pos]] = pos;
    } else {
        for (int i = 0; i < nletters; ++i) rank[i] = i;
    }
    std::vector<int> weight(nletters, 1);
    if (letter_weights) {
        if (static_cast<int>(letter_weights->size()) != nletters) throw error("letter weight size mismatch");
        weight = *letter_weights;
    }

    Completion c;
    c.gen_count = g.gen_count;
    c.rank = rank;
    c.weight = weight;
    c.limits = limits;
    c.start = std::chrono::steady_clock::now();
    c.by_last.assign(nletters, {});

    for (int gen = 0; gen < g.gen_count; ++gen) {
        Letter pos = make_letter(gen, 1), neg = make_letter(gen, -1);
        c.install({pos, neg}, {});
        c.install({neg, pos}, {});
    }
    for (const Word& r : g.relators) {
        c.equations.emplace_back(r.letters(), Letters{});
        c.equations.emplace_back(r.inverse().letters(), Letters{});
    }

    int steps = 0;
    while (!c.overflowed) {
        if (++steps % 64 == 0 && c.out_of_time()) return c.finish(false);
        if (!c.equations.empty()) {
            auto [a, b] = std::move(c.equations.front());
            c.equations.pop_front();
            c.process_equation(a, b);
            continue;
        }
        bool examined = false;
        while (!c.pair_queue.empty()) {
            Completion::Task t = c.pair_queue.top();
            c.pair_queue.pop();
            if (!c.rules[t.i].alive || !c.rules[t.j].alive) continue;
            c.superpose(t.i, t.j);
            examined = true;
            break;
        }
        if (!examined) break; // no equations, no unexamined pairs: confluent
    }
    return c.finish(!c.overflowed && c.equations.empty() && c.pair_queue.empty());
}

RewriteSystem kb_complete_auto(const GroupPresentation& g, KbLimits limits) {
    const int n = 2 * g.gen_count;
    std::vector<std::vector<int>> orders;
    std::vector<int> o(n);
    for (int i = 0; i < n; ++i) o[i] = i;
    orders.push_back(o); // x1 < x1^-1 < x2 < ...
    // generators first, then inverses
    for (int i = 0; i < g.gen_count; ++i) o[i] = 2 * i;
    for (int i = 0; i < g.gen_count; ++i) o[g.gen_count + i] = 2 * i + 1;
    orders.push_back(o);
    // reversed generator order
    for (int i = 0; i < g.gen_count; ++i) {
        o[2 * i] = 2 * (g.gen_count - 1 - i);
        o[2 * i + 1] = 2 * (g.gen_count - 1 - i) + 1;
    }
    orders.push_back(o);
    // inverse before generator
    for (int i = 0; i < g.gen_count; ++i) {
        o[2 * i] = 2 * i + 1;
        o[2 * i + 1] = 2 * i;
    }
    orders.push_back(o);

    KbLimits per = limits;
    per.seconds = limits.seconds / static_cast<double>(orders.size());
    RewriteSystem best;
    bool have = false;
    for (const auto& ord : orders) {
        RewriteSystem rs = kb_complete(g, per, &ord);
        if (rs.complete()) return rs;
        if (!have || rs.rules().size() < best.rules().size()) {
            best = rs;
            have = true;
        }
    }
    return best;
}

std::string to_string(Triviality t) {
    switch (t) {
        case Triviality::trivial: return "Trivial";
        case Triviality::nontrivial: return "Nontrivial";
        default: return "Unknown";
    }
}

Triviality word_is_trivial(const Word& w, const RewriteSystem& rs) {
    if (rs.normal_form(w).is_identity()) return Triviality::trivial;
    return rs.complete() ? Triviality::nontrivial : Triviality::unknown;
}

WordProblem::WordProblem(const WirtingerData& w, KbLimits limits) : data_(w) {
    rs_ = kb_complete_auto(w.pres, limits);
    if (!rs_.complete()) try_torus_transport();
    for (i64 p : {2, 3, 5}) {
        RepEnumOptions opts;
        opts.nonabelian_only = false;
        opts.up_to_conjugacy = true;
        for (Rep2& r : enumerate_reps(w, p, opts)) refuters_.push_back(std::move(r));
    }
}

namespace {

// Solve each still-unknown generator from a relator in which it occurs
// exactly once and every other letter is already known:
// r = P g^e S = 1 gives g = (P^-1 S^-1)^e.
bool express_images(const GroupPresentation& g, std::vector<std::optional<Word>>& images) {
    bool progress = true;
    while (progress) {
        progress = false;
        bool all = true;
        for (int i = 0; i < g.gen_count; ++i) all = all && images[i].has_value();
        if (all) return true;
        for (const Word& r : g.relators) {
            int unknown = -1, count = 0;
            size_t pos = 0, at = 0;
            for (Letter l : r.letters()) {
                if (!images[letter_gen(l)]) {
                    if (unknown != -1 && unknown != letter_gen(l)) {
                        count = 2; // more than one unknown generator
                        break;
                    }
                    unknown = letter_gen(l);
                    at = pos;
                    ++count;
                }
                ++pos;
            }
            if (unknown < 0 || count != 1) continue;
            const auto& ls = r.letters();
            Word P = Word::from_letters({ls.begin(), ls.begin() + at});
            Word S = Word::from_letters({ls.begin() + at + 1, ls.end()});
            Word expr = P.inverse() * S.inverse();
            if (letter_sign(ls[at]) < 0) expr = expr.inverse();
            // substitute the known images into the expression
            Word img;
            for (Letter l : expr.letters()) {
                const Word& im = *images[letter_gen(l)];
                img = img * (letter_sign(l) > 0 ? im : im.inverse());
            }
            images[unknown] = img;
            progress = true;
        }
    }
    for (int i = 0; i < g.gen_count; ++i)
        if (!images[i]) return false;
    return true;
}

} // namespace

void WordProblem::try_torus_transport() {
    // H = <c, d, z | c^2 z^-1, d^3 z^-1>; its shortlex completion is finite.
    GroupPresentation H;
    H.gen_count = 3;
    H.relators.push_back(Word::from_letters({1, 1, -3}));
    H.relators.push_back(Word::from_letters({2, 2, 2, -3}));
    static const std::vector<int> order = {0, 5, 1, 3, 2, 4};
    KbLimits lim;
    lim.seconds = 5.0;
    RewriteSystem rsH = kb_complete(H, lim, &order);
    if (!rsH.complete()) return;

    const Word c = Word::gen(0), d = Word::gen(1);
    const Word a_img = d.inverse() * c;              // d^-1 c
    const Word b_img = c.inverse() * d * d;          // c^-1 d^2

    const GroupPresentation& G = data_.pres;
    for (int i = 0; i < G.gen_count; ++i) {
        for (int j = 0; j < G.gen_count; ++j) {
            if (i == j) continue;
            std::vector<std::optional<Word>> images(G.gen_count);
            images[i] = a_img;
            images[j] = b_img;
            if (!express_images(G, images)) continue;
            std::vector<Word> phi;
            for (auto& im : images) phi.push_back(*im);

            // forward map must kill every relator in H
            bool ok = true;
            for (const Word& r : G.relators)
                ok = ok && rsH.normal_form(substitute(phi, r)).is_identity();
            if (!ok) continue;

            // backward map: c -> x_i x_j x_i, d -> x_i x_j, z -> (x_i x_j x_i)^2
            Word xi = Word::gen(i), xj = Word::gen(j);
            std::vector<Word> psi = {xi * xj * xi, xi * xj, (xi * xj * xi).pow(2)};
            for (const Word& r : H.relators)
                ok = ok && rs_.normal_form(substitute(psi, r)).is_identity();
            if (!ok) continue;

            // round trip fixes every generator of the input presentation
            for (int g = 0; g < G.gen_count && ok; ++g) {
                Word round = substitute(psi, phi[g]) * Word::gen(g, -1);
                ok = rs_.normal_form(round).is_identity();
            }
            if (!ok) continue;

            torus_ = H;
            torus_rs_ = rsH;
            forward_ = std::move(phi);
            transported_ = true;
            return;
        }
    }
}

std::string WordProblem::description() const {
    if (rs_.complete())
        return "complete rewrite system, " + std::to_string(rs_.rules().size()) + " rules";
    if (transported_)
        return "complete rewrite system with " + std::to_string(torus_rs_.rules().size()) +
               " rules on a certified isomorphic presentation <c,d,z | c^2=z, d^3=z>";
    return "partial rewrite system, " + std::to_string(rs_.rules().size()) +
           " rules, plus representation refutation";
}

Triviality WordProblem::is_trivial(const Word& w) const {
    if (rs_.complete())
        return rs_.normal_form(w).is_identity() ? Triviality::trivial : Triviality::nontrivial;
    if (transported_) {
        Word img = torus_rs_.normal_form(substitute(forward_, w));
        return img.is_identity() ? Triviality::trivial : Triviality::nontrivial;
    }
    if (rs_.normal_form(w).is_identity()) return Triviality::trivial; // sound: rules preserve the element
    for (const Rep2& r : refuters_)
        if (!eval_word(r, w).is_identity()) return Triviality::nontrivial;
    return Triviality::unknown;
}

Word WordProblem::canonical_key(const Word& w) const {
    if (transported_ && !rs_.complete()) return torus_rs_.normal_form(substitute(forward_, w));
    return rs_.normal_form(w);
}

bool WordProblem::equal(const Word& a, const Word& b) const {
    return canonical_key(a) == canonical_key(b);
}

std::vector<Word> WordProblem::elements(int max_len, size_t cap) const {
    std::set<Word> seen;
    std::vector<Word> out;
    std::deque<Word> frontier;
    Word id;
    seen.insert(canonical_key(id));
    out.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty() && out.size() < cap) {
        Word w = frontier.front();
        frontier.pop_front();
        if (static_cast<int>(w.length()) >= max_len) continue;
        for (int gen = 0; gen < data_.pres.gen_count; ++gen) {
            for (int sign : {1, -1}) {
                Word next = rs_.normal_form(w * Word::gen(gen, sign));
                if (static_cast<int>(next.length()) > max_len) continue;
                if (seen.insert(canonical_key(next)).second) {
                    out.push_back(next);
                    frontier.push_back(next);
                    if (out.size() >= cap) break;
                }
            }
            if (out.size() >= cap) break;
        }
    }
    return out;
}

} // namespace tapoly
