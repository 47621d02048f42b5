#include "tapoly/order.hpp"

#include <algorithm>
#include <sstream>

namespace tapoly {

std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::no_surjection: return "NO-SURJECTION";
        case OrderKind::surjection_verified: return "SURJECTION-VERIFIED";
        default: return "INCONCLUSIVE";
    }
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

int gen_index(const std::vector<std::string>& names, const std::string& nm) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == nm) return static_cast<int>(i);
    return -1;
}

} // namespace

HomCase parse_hom_file(const std::string& text, const KnotResolver& resolve) {
    HomCase h;
    bool have_source = false, have_target = false;
    std::vector<std::optional<Word>> images;
    std::vector<std::pair<std::string, std::string>> witness_lines;
    std::vector<std::pair<std::string, std::string>> image_lines;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("source:", 0) == 0) {
            h.source = resolve(trim(line.substr(7)));
            have_source = true;
        } else if (line.rfind("target:", 0) == 0) {
            h.target = resolve(trim(line.substr(7)));
            have_target = true;
        } else if (line.rfind("witness:", 0) == 0) {
            std::string rest = line.substr(8);
            auto arrow = rest.find("<-");
            if (arrow == std::string::npos) throw error("hom file: witness line needs '<-': " + line);
            witness_lines.emplace_back(trim(rest.substr(0, arrow)), trim(rest.substr(arrow + 2)));
        } else {
            auto arrow = line.find("->");
            if (arrow == std::string::npos) throw error("hom file: expected 'gen -> word': " + line);
            image_lines.emplace_back(trim(line.substr(0, arrow)), trim(line.substr(arrow + 2)));
        }
    }
    if (!have_source || !have_target) throw error("hom file: missing source: or target: line");

    images.assign(h.source.pres.gen_count, std::nullopt);
    for (auto& [lhs, rhs] : image_lines) {
        int g = gen_index(h.source.gen_names, lhs);
        if (g < 0) throw error("hom file: unknown source generator '" + lhs + "'");
        if (images[g]) throw error("hom file: duplicate image for '" + lhs + "'");
        images[g] = parse_word(rhs, h.target.gen_names);
    }
    for (int g = 0; g < h.source.pres.gen_count; ++g) {
        if (!images[g]) throw error("hom file: no image for generator '" + h.source.gen_names[g] + "'");
        h.images.push_back(*images[g]);
    }
    for (auto& [tgt, src] : witness_lines) {
        int g = gen_index(h.target.gen_names, tgt);
        if (g < 0) throw error("hom file: unknown target generator '" + tgt + "' in witness");
        h.witnesses[g] = parse_word(src, h.source.gen_names);
    }
    return h;
}

HomCase identity_hom(const WirtingerData& k) {
    HomCase h;
    h.source = k;
    h.target = k;
    for (int g = 0; g < k.pres.gen_count; ++g) h.images.push_back(Word::gen(g));
    return h;
}

OrderVerdict verify_surjection(HomCase& h, const WordProblem& target_words) {
    OrderVerdict v;
    std::ostringstream rep;
    if (static_cast<int>(h.images.size()) != h.source.pres.gen_count)
        throw error("verify_surjection: image count mismatch");

    rep << "homomorphism " << h.source.name << " -> " << h.target.name << "\n";
    rep << "word problem for " << h.target.name << ": " << target_words.description() << "\n";

    bool all_ok = true, definite_failure = false;
    for (size_t i = 0; i < h.source.pres.relators.size(); ++i) {
        const Word& r = h.source.pres.relators[i];
        Word img = substitute(h.images, r);
        Triviality t = target_words.is_trivial(img);
        rep << "relator " << i + 1 << ": " << word_to_string(r, h.source.gen_names) << " |-> "
            << word_to_string(img, h.target.gen_names) << " : " << to_string(t) << "\n";
        if (t != Triviality::trivial) {
            all_ok = false;
            if (t == Triviality::nontrivial) definite_failure = true;
        }
    }
    if (!all_ok) {
        v.kind = OrderKind::inconclusive;
        rep << (definite_failure ? "not a homomorphism: some relator image is nontrivial\n"
                                 : "relator triviality unknown: cannot certify\n");
        v.report = rep.str();
        return v;
    }

    for (int g = 0; g < h.target.pres.gen_count; ++g) {
        Word target_gen = Word::gen(g);
        bool verbatim = std::find(h.images.begin(), h.images.end(), target_gen) != h.images.end();
        if (verbatim) {
            rep << "generator " << h.target.gen_names[g] << ": verbatim image\n";
            continue;
        }
        auto wit = h.witnesses.find(g);
        if (wit == h.witnesses.end()) {
            v.kind = OrderKind::inconclusive;
            rep << "generator " << h.target.gen_names[g] << ": no verbatim image and no witness\n";
            v.report = rep.str();
            return v;
        }
        Word img = substitute(h.images, wit->second) * target_gen.inverse();
        Triviality t = target_words.is_trivial(img);
        rep << "generator " << h.target.gen_names[g] << ": witness "
            << word_to_string(wit->second, h.source.gen_names) << " : " << to_string(t) << "\n";
        if (t != Triviality::trivial) {
            v.kind = OrderKind::inconclusive;
            v.report = rep.str();
            return v;
        }
    }

    h.verified = true;
    v.kind = OrderKind::surjection_verified;
    rep << "surjection verified\n";
    v.report = rep.str();
    return v;
}

OrderVerdict verify_surjection(HomCase& h) {
    WordProblem wp(h.target);
    return verify_surjection(h, wp);
}

namespace {

std::optional<std::string> defeat_reason(const TAPair& source_pair, const TAPair& target_pair) {
    if (!(source_pair.den == target_pair.den)) return "denominator-mismatch";
    if (!is_divisible(source_pair.num, target_pair.num)) return "not-divisible";
    return std::nullopt;
}

} // namespace

OrderVerdict no_surjection_certificate(const WirtingerData& k1, const WirtingerData& k2, i64 p,
                                       NoSurjOptions opts) {
    if (!is_prime(p)) throw error("not a prime: " + std::to_string(p));
    OrderVerdict v;
    NoSurjEvidence e;
    e.source = k1.name;
    e.target = k2.name;
    e.p = p;
    e.alex_source = classical_alexander(k1);
    e.alex_target = classical_alexander(k2);

    // classical pre-filter over the integers
    if (!is_divisible(e.alex_source, e.alex_target)) {
        e.classical_only = true;
        v.kind = OrderKind::no_surjection;
        v.evidence = e;
        v.report = certificate_to_string(e);
        return v;
    }

    RepEnumOptions rep_opts;
    rep_opts.nonabelian_only = opts.nonabelian_only;
    rep_opts.up_to_conjugacy = true;

    std::vector<TAPair> source_pairs = twisted_pair_table(k1, p, rep_opts);
    std::vector<Rep2> target_reps = enumerate_reps(k2, p, rep_opts);

    std::vector<TAPair> tried;
    for (const Rep2& rho2 : target_reps) {
        TAPair pair2 = twisted_pair(k2, rho2);
        bool dup = false;
        for (const TAPair& t : tried)
            if (pair_equal(t, pair2)) {
                dup = true;
                break;
            }
        if (dup) continue;
        tried.push_back(pair2);

        std::vector<DefeatedPair> defeats;
        bool all = true;
        for (const TAPair& sp : source_pairs) {
            auto reason = defeat_reason(sp, pair2);
            if (!reason) {
                all = false;
                break;
            }
            defeats.push_back(DefeatedPair{sp, *reason});
        }
        if (all && !source_pairs.empty()) {
            e.witness = rho2;
            e.witness_pair = pair2;
            e.source_pairs = std::move(defeats);
            v.kind = OrderKind::no_surjection;
            v.evidence = e;
            v.report = certificate_to_string(*v.evidence);
            return v;
        }
    }

    v.kind = OrderKind::inconclusive;
    std::ostringstream rep;
    rep << "inconclusive: no representation of " << k2.name << " over F_" << p << " defeats all "
        << source_pairs.size() << " source pairs of " << k1.name << "\n";
    v.report = rep.str();
    return v;
}

std::string certificate_to_string(const NoSurjEvidence& e) {
    std::ostringstream out;
    out << "certificate: no-surjection\n";
    out << "source: " << e.source << "\n";
    out << "target: " << e.target << "\n";
    out << "mode: " << (e.classical_only ? "classical" : "twisted") << "\n";
    out << "alex-source: " << e.alex_source.to_string() << "\n";
    out << "alex-target: " << e.alex_target.to_string() << "\n";
    if (!e.classical_only) {
        out << "prime: " << e.p << "\n";
        out << "witness: " << rep_to_string(*e.witness, default_names(static_cast<int>(e.witness->images.size())))
            << "\n";
        out << "witness-pair: " << pair_to_string(*e.witness_pair) << "\n";
        out << "source-pairs: " << e.source_pairs.size() << "\n";
        for (const DefeatedPair& d : e.source_pairs)
            out << "pair: " << pair_to_string(d.pair) << " ; reason = " << d.reason << "\n";
    }
    return out.str();
}

bool verify_certificate(const std::string& text, const KnotResolver& resolve, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::map<std::string, std::string> fields;
    std::vector<std::string> pair_lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) return fail("malformed line: " + line);
        std::string key = line.substr(0, colon);
        std::string value = trim(line.substr(colon + 1));
        if (key == "pair")
            pair_lines.push_back(value);
        else
            fields[key] = value;
    }
    if (fields["certificate"] != "no-surjection") return fail("not a no-surjection certificate");

    WirtingerData source = resolve(fields["source"]);
    WirtingerData target = resolve(fields["target"]);
    LaurentPoly alex_src = classical_alexander(source);
    LaurentPoly alex_tgt = classical_alexander(target);
    if (alex_src.to_string() != fields["alex-source"]) return fail("stated source Alexander polynomial mismatch");
    if (alex_tgt.to_string() != fields["alex-target"]) return fail("stated target Alexander polynomial mismatch");

    if (fields["mode"] == "classical") {
        if (is_divisible(alex_src, alex_tgt)) return fail("classical certificate does not hold: divisible");
        return true;
    }
    if (fields["mode"] != "twisted") return fail("unknown mode");

    i64 p = std::stoll(fields["prime"]);
    if (!is_prime(p)) return fail("prime field invalid");
    Ring R = Ring::fp(p);

    Rep2 witness = parse_rep(fields["witness"], default_names(target.pres.gen_count));
    if (witness.p != p) return fail("witness prime mismatch");
    if (!rep_check(witness, target.pres)) return fail("witness is not a representation of the target group");

    TAPair wpair = twisted_pair(target, witness);
    auto parse_pair = [&](const std::string& s, TAPair& t) {
        // N = ... ; D = ... ; p = ... [; rep = ...] [; reason = ...]
        std::istringstream ps(s);
        std::string fieldtext;
        std::string reason;
        t.p = p;
        t.num = LaurentPoly::zero(R);
        t.den = LaurentPoly::zero(R);
        while (std::getline(ps, fieldtext, ';')) {
            auto eq = fieldtext.find('=');
            if (eq == std::string::npos) continue;
            std::string k = trim(fieldtext.substr(0, eq));
            std::string val = trim(fieldtext.substr(eq + 1));
            if (k == "N") t.num = LaurentPoly::parse(val, R);
            if (k == "D") t.den = LaurentPoly::parse(val, R);
            if (k == "reason") reason = val;
        }
        return reason;
    };
    TAPair stated_wpair;
    parse_pair(fields["witness-pair"], stated_wpair);
    if (!pair_equal(wpair, stated_wpair)) return fail("witness pair does not match recomputation");

    if (pair_lines.size() != static_cast<size_t>(std::stoll(fields["source-pairs"])))
        return fail("source pair count mismatch");
    for (const std::string& pl : pair_lines) {
        TAPair sp;
        std::string reason = parse_pair(pl, sp);
        auto actual = defeat_reason(sp, wpair);
        if (!actual) return fail("stored pair is not defeated: " + pl);
        if (*actual != reason) return fail("stored defeat reason mismatch: " + pl);
    }
    return true;
}

PeripheralImage peripheral_image(const HomCase& h, const WordProblem& target_words, int bound) {
    if (!h.verified) throw error("peripheral_image requires a verified homomorphism");
    if (!h.source.longitude) throw error("source knot has no stored longitude");
    if (!h.target.longitude) throw error("target knot has no stored longitude");

    const Word phim = substitute(h.images, h.source.meridian);
    const Word phil = substitute(h.images, *h.source.longitude);
    const Word& m2 = h.target.meridian;
    const Word& l2 = *h.target.longitude;

    PeripheralImage out;
    out.a = phil.exponent_sum(); // exponent_sum(l2) = 0, exponent_sum(m2) = 1

    // conjugate the image of the meridian onto the target meridian
    std::optional<Word> conj;
    for (const Word& c : target_words.elements(6, 20000)) {
        if (target_words.equal(c.inverse() * phim * c, m2)) {
            conj = c;
            break;
        }
    }
    if (!conj) return out; // meridian image not recognizably a meridian conjugate

    Word core = conj->inverse() * phil * *conj;
    for (int k = 0; k <= bound; ++k) {
        for (int b : {k, -k}) {
            Word test = l2.pow(-b) * m2.pow(static_cast<int>(-out.a)) * core;
            if (target_words.is_trivial(test) == Triviality::trivial) {
                out.b = b;
                out.solved = true;
                return out;
            }
            if (k == 0) break;
        }
    }
    return out;
}

PeripheralImage peripheral_image(const HomCase& h, int bound) {
    WordProblem wp(h.target);
    return peripheral_image(h, wp, bound);
}

} // namespace tapoly
