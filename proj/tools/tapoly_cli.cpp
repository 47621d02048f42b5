// tapoly command line: classical and twisted Alexander polynomials of knot
// groups, surjection-order certificates, homomorphism verification, and
// degree-one map detection.
//
// exit codes: 0 definitive verdict / success, 2 inconclusive, 1 error

#include "CLI11.hpp"

#include "tapoly/knot_table.hpp"
#include "tapoly/order.hpp"
#include "tapoly/twisted.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tapoly;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_path(const std::string& s) {
    return s.find('/') != std::string::npos || s.find(".pd") != std::string::npos ||
           s.find(".pres") != std::string::npos || s.find(".txt") != std::string::npos;
}

WirtingerData resolve_knot(const std::string& name) {
    if (!looks_like_path(name)) return builtin_knot(name);
    std::string text = read_file(name);
    if (text.rfind("gens:", 0) == 0 || text.find("\ngens:") != std::string::npos)
        return parse_presentation(text);
    auto knots = parse_pd_file(text);
    if (knots.size() != 1) throw error("expected exactly one knot in '" + name + "'");
    WirtingerData w = wirtinger(knots[0].second, knots[0].first);
    return w;
}

void check_prime(i64 p, bool allow_any) {
    if (!is_prime(p)) throw error("not a prime: " + std::to_string(p));
    if (allow_any) return;
    for (i64 q : {2, 3, 5, 7, 11, 17})
        if (p == q) return;
    throw error("prime " + std::to_string(p) + " outside the default set {2,3,5,7,11,17}; pass --allow-any-prime");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Alexander polynomials and the surjection order on knot groups"};
    app.require_subcommand(1);

    std::string knot_name, knot2_name, map_path, pd_path;
    i64 prime = 5;
    bool all_pairs = false, nonabelian_only = false, allow_any_prime = false, as_presentation = false;
    int bound = 8;

    auto* alex = app.add_subcommand("alex", "classical Alexander polynomial of a knot");
    alex->add_option("knot", knot_name, "knot name or file")->required();

    auto* talex = app.add_subcommand("talex", "twisted Alexander pairs over SL(2,F_p)");
    talex->add_option("knot", knot_name, "knot name or file")->required();
    talex->add_option("--prime", prime, "prime p")->required();
    talex->add_flag("--all", all_pairs, "print every deduplicated pair");
    talex->add_flag("--nonabelian-only", nonabelian_only, "restrict to nonabelian representations");
    talex->add_flag("--allow-any-prime", allow_any_prime, "accept primes outside {2,3,5,7,11,17}");

    auto* order = app.add_subcommand("order", "decide K1 >= K2 via the divisibility criterion");
    order->add_option("K1", knot_name, "source knot")->required();
    order->add_option("K2", knot2_name, "target knot")->required();
    order->add_option("--prime", prime, "prime p")->required();
    order->add_flag("--nonabelian-only", nonabelian_only, "restrict the criterion to nonabelian representations");
    order->add_flag("--allow-any-prime", allow_any_prime, "accept primes outside {2,3,5,7,11,17}");

    auto* verify = app.add_subcommand("verify-hom", "verify a homomorphism file and its surjectivity");
    verify->add_option("mapfile", map_path, "homomorphism file")->required();

    auto* degree = app.add_subcommand("degree-one", "peripheral image and degree-one verdict of a map");
    degree->add_option("mapfile", map_path, "homomorphism file")->required();
    degree->add_option("--bound", bound, "search bound for the longitude coefficient");

    auto* ingest = app.add_subcommand("ingest", "parse and normalize a PD file");
    ingest->add_option("pdfile", pd_path, "PD file, one knot per line")->required();
    ingest->add_flag("--presentation", as_presentation, "print Wirtinger presentations instead of PD lines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (alex->parsed()) {
            WirtingerData w = resolve_knot(knot_name);
            std::cout << classical_alexander(w).to_string() << "\n";
            return 0;
        }

        if (talex->parsed()) {
            check_prime(prime, allow_any_prime);
            WirtingerData w = resolve_knot(knot_name);
            RepEnumOptions opts;
            opts.nonabelian_only = nonabelian_only;
            auto pairs = twisted_pair_table(w, prime, opts);
            if (all_pairs) {
                for (const TAPair& t : pairs) std::cout << pair_to_string(t) << "\n";
            } else {
                std::cout << pairs.size() << " distinct pair(s) over F_" << prime << "\n";
                if (!pairs.empty()) std::cout << "first: " << pair_to_string(pairs.front()) << "\n";
            }
            return 0;
        }

        if (order->parsed()) {
            check_prime(prime, allow_any_prime);
            WirtingerData k1 = resolve_knot(knot_name);
            WirtingerData k2 = resolve_knot(knot2_name);
            NoSurjOptions opts;
            opts.nonabelian_only = nonabelian_only;
            OrderVerdict v = no_surjection_certificate(k1, k2, prime, opts);
            std::cout << to_string(v.kind) << "\n" << v.report;
            return v.kind == OrderKind::inconclusive ? 2 : 0;
        }

        if (verify->parsed()) {
            HomCase h = parse_hom_file(read_file(map_path), resolve_knot);
            OrderVerdict v = verify_surjection(h);
            std::cout << to_string(v.kind) << "\n" << v.report;
            return v.kind == OrderKind::surjection_verified ? 0 : 2;
        }

        if (degree->parsed()) {
            HomCase h = parse_hom_file(read_file(map_path), resolve_knot);
            WordProblem wp(h.target);
            OrderVerdict v = verify_surjection(h, wp);
            if (v.kind != OrderKind::surjection_verified) {
                std::cout << "cannot verify the homomorphism first:\n" << v.report;
                return 2;
            }
            PeripheralImage pi = peripheral_image(h, wp, bound);
            if (!pi.solved) {
                std::cout << "peripheral image not certified within bound " << bound << "\n";
                return 2;
            }
            std::cout << "a = " << pi.a << "\nb = " << pi.b << "\n"
                      << (pi.degree_one() ? "degree-one map: yes" : "degree-one map: no") << "\n";
            return 0;
        }

        if (ingest->parsed()) {
            auto knots = parse_pd_file(read_file(pd_path));
            std::vector<WirtingerData> derived;
            for (auto& [name, diagram] : knots) derived.push_back(wirtinger(diagram, name));
            if (as_presentation) {
                for (const WirtingerData& w : derived) std::cout << presentation_to_string(w) << "\n";
            } else {
                std::cout << pd_file_to_string(knots);
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
