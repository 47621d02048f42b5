// python bindings for the main operations: knot ingestion, classical and
// twisted Alexander polynomials, representation enumeration, and the
// surjection-order toolset

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tapoly/knot_table.hpp"
#include "tapoly/order.hpp"
#include "tapoly/twisted.hpp"

namespace py = pybind11;
using namespace tapoly;

namespace {

Ring ring_of(i64 p) {
    if (p != 0 && !is_prime(p)) throw error("p must be 0 (integers) or a prime");
    return p == 0 ? Ring::integers() : Ring::fp(p);
}

py::dict verdict_to_dict(const OrderVerdict& v) {
    py::dict d;
    d["kind"] = to_string(v.kind);
    d["report"] = v.report;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "twisted Alexander polynomials and the surjection order on knot groups";

    py::class_<WirtingerData>(m, "Knot")
        .def_readonly("name", &WirtingerData::name)
        .def_property_readonly("generator_count",
                               [](const WirtingerData& w) { return w.pres.gen_count; })
        .def_property_readonly("generators", [](const WirtingerData& w) { return w.gen_names; })
        .def_property_readonly("relators",
                               [](const WirtingerData& w) {
                                   std::vector<std::string> out;
                                   for (const Word& r : w.pres.relators)
                                       out.push_back(word_to_string(r, w.gen_names));
                                   return out;
                               })
        .def_property_readonly("meridian",
                               [](const WirtingerData& w) { return word_to_string(w.meridian, w.gen_names); })
        .def_property_readonly("longitude",
                               [](const WirtingerData& w) -> py::object {
                                   if (!w.longitude) return py::none();
                                   return py::str(word_to_string(*w.longitude, w.gen_names));
                               })
        .def("alexander",
             [](const WirtingerData& w) { return classical_alexander(w).to_string(); },
             "classical Alexander polynomial, canonical form")
        .def("presentation", [](const WirtingerData& w) { return presentation_to_string(w); })
        .def("__repr__", [](const WirtingerData& w) {
            return "<Knot " + w.name + ", " + std::to_string(w.pres.gen_count) + " generators>";
        });

    m.def("knot_names", &builtin_knot_names);
    m.def("knot", &builtin_knot, py::arg("name"), "look up a built-in knot");
    m.def(
        "knot_from_pd",
        [](const std::string& pd, const std::string& name) { return wirtinger(parse_pd(pd), name); },
        py::arg("pd"), py::arg("name") = "", "Wirtinger data from a PD code");
    m.def("knot_from_presentation", &parse_presentation, py::arg("text"));
    m.def("two_bridge_knot", &two_bridge, py::arg("p"), py::arg("q"), py::arg("name"));

    m.def(
        "twisted_pairs",
        [](const WirtingerData& w, i64 p, bool nonabelian_only, bool up_to_conjugacy) {
            RepEnumOptions opts;
            opts.nonabelian_only = nonabelian_only;
            opts.up_to_conjugacy = up_to_conjugacy;
            std::vector<std::pair<std::string, std::string>> out;
            for (const TAPair& t : twisted_pair_table(w, p, opts))
                out.emplace_back(t.num.canonical().to_string(), t.den.to_string());
            return out;
        },
        py::arg("knot"), py::arg("p"), py::arg("nonabelian_only") = false,
        py::arg("up_to_conjugacy") = true,
        "deduplicated (numerator, denominator) pairs over SL(2,F_p), canonical numerators");

    m.def(
        "representations",
        [](const WirtingerData& w, i64 p, bool nonabelian_only, bool up_to_conjugacy) {
            RepEnumOptions opts;
            opts.nonabelian_only = nonabelian_only;
            opts.up_to_conjugacy = up_to_conjugacy;
            std::vector<std::string> out;
            for (const Rep2& r : enumerate_reps(w, p, opts)) out.push_back(rep_to_string(r, w.gen_names));
            return out;
        },
        py::arg("knot"), py::arg("p"), py::arg("nonabelian_only") = false,
        py::arg("up_to_conjugacy") = true, "SL(2,F_p) representations in certificate text form");

    m.def(
        "no_surjection",
        [](const WirtingerData& k1, const WirtingerData& k2, i64 p, bool nonabelian_only) {
            NoSurjOptions opts;
            opts.nonabelian_only = nonabelian_only;
            return verdict_to_dict(no_surjection_certificate(k1, k2, p, opts));
        },
        py::arg("source"), py::arg("target"), py::arg("p"), py::arg("nonabelian_only") = false,
        "divisibility criterion for the non-existence of a surjection; the report carries the certificate");

    m.def(
        "verify_certificate",
        [](const std::string& text) {
            std::string why;
            bool ok = verify_certificate(text, builtin_knot, &why);
            return py::make_tuple(ok, why);
        },
        py::arg("text"), "(ok, reason) after re-checking a stored no-surjection certificate");

    m.def(
        "verify_hom",
        [](const std::string& text) {
            HomCase h = parse_hom_file(text, builtin_knot);
            return verdict_to_dict(verify_surjection(h));
        },
        py::arg("text"), "verify a homomorphism file (source/target resolved among built-in knots)");

    m.def(
        "degree_one",
        [](const std::string& text, int bound) {
            HomCase h = parse_hom_file(text, builtin_knot);
            WordProblem words(h.target);
            OrderVerdict v = verify_surjection(h, words);
            py::dict d = verdict_to_dict(v);
            if (v.kind == OrderKind::surjection_verified) {
                PeripheralImage pi = peripheral_image(h, words, bound);
                d["a"] = pi.a;
                d["b"] = pi.b;
                d["solved"] = pi.solved;
                d["degree_one"] = pi.degree_one();
            }
            return d;
        },
        py::arg("text"), py::arg("bound") = 8,
        "verify a map and compute its peripheral image phi(l1) = m2^a l2^b");

    m.def(
        "poly_canonical",
        [](const std::string& f, i64 p) { return LaurentPoly::parse(f, ring_of(p)).canonical().to_string(); },
        py::arg("f"), py::arg("p") = 0);
    m.def(
        "poly_divides",
        [](const std::string& f, const std::string& g, i64 p) {
            Ring r = ring_of(p);
            return is_divisible(LaurentPoly::parse(f, r), LaurentPoly::parse(g, r));
        },
        py::arg("f"), py::arg("g"), py::arg("p") = 0, "true iff g divides f over Z (p=0) or F_p");
    m.def(
        "poly_gcd",
        [](const std::vector<std::string>& fs, i64 p) {
            Ring r = ring_of(p);
            std::vector<LaurentPoly> polys;
            for (const std::string& f : fs) polys.push_back(LaurentPoly::parse(f, r));
            return lp_gcd(polys).to_string();
        },
        py::arg("fs"), py::arg("p") = 0);

    m.attr("__version__") = "0.1.0";
}
