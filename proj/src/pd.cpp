#include "tapoly/pd.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace tapoly {

int KnotDiagram::writhe() const {
    int w = 0;
    for (const PdCrossing& c : crossings) w += c.sign;
    return w;
}

namespace {

[[noreturn]] void syntax_fail(const std::string& msg) {
    throw pd_error(PdErrorKind::syntax, "PD syntax error: " + msg);
}

} // namespace

KnotDiagram parse_pd(const std::string& text) {
    KnotDiagram d;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto skip_sep = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    skip_sep();
    if (i == text.size()) syntax_fail("empty PD code");
    while (i < text.size()) {
        if (text[i] != 'X') syntax_fail("expected 'X' at offset " + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] != '[') syntax_fail("expected '[' after 'X'");
        ++i;
        PdCrossing c;
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                syntax_fail("expected edge label");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
            c.e[k] = v;
            skip_ws();
            if (k < 3) {
                if (i >= text.size() || text[i] != ',') syntax_fail("expected ',' between labels");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ']') syntax_fail("expected ']'");
        ++i;
        d.crossings.push_back(c);
        skip_sep();
    }

    const int n = d.crossing_count();
    const int edges = 2 * n;

    // every label in 1..2n exactly twice
    std::vector<int> count(edges + 1, 0);
    for (const PdCrossing& c : d.crossings)
        for (int v : c.e) {
            if (v < 1 || v > edges)
                throw pd_error(PdErrorKind::multiplicity,
                               "edge label " + std::to_string(v) + " out of range 1.." + std::to_string(edges));
            ++count[v];
        }
    for (int v = 1; v <= edges; ++v)
        if (count[v] != 2)
            throw pd_error(PdErrorKind::multiplicity,
                           "edge label " + std::to_string(v) + " appears " + std::to_string(count[v]) +
                               " times (expected 2)");

    auto succ_of = [edges](int e) { return e % edges + 1; };

    // Component count first, independent of crossing signs: every edge has
    // exactly two passage incidences ({a,c} under, {b,d} over), so the
    // incidence multigraph splits into one cycle per link component.
    {
        std::vector<std::vector<int>> adj(edges + 1);
        for (const PdCrossing& c : d.crossings) {
            adj[c.e[0]].push_back(c.e[2]);
            adj[c.e[2]].push_back(c.e[0]);
            adj[c.e[1]].push_back(c.e[3]);
            adj[c.e[3]].push_back(c.e[1]);
        }
        std::vector<char> seen(edges + 1, 0);
        int prev = -1, cur = 1, visited = 0;
        while (!seen[cur]) {
            seen[cur] = 1;
            ++visited;
            // leave through the other passage than the one we arrived by
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        if (visited != edges)
            throw pd_error(PdErrorKind::multicomponent,
                           "PD code traces " + std::to_string(visited) + " of " + std::to_string(edges) +
                               " edges: not a single-component knot");
    }

    // under-strand must advance by one and over-strand direction fixes the sign
    for (PdCrossing& c : d.crossings) {
        if (c.under_out() != succ_of(c.under_in()))
            syntax_fail("under-strand " + std::to_string(c.under_in()) + " does not continue to " +
                        std::to_string(c.under_out()));
        int b = c.e[1], dd = c.e[3];
        bool b_to_d = dd == succ_of(b);
        bool d_to_b = b == succ_of(dd);
        if (!b_to_d && !d_to_b) syntax_fail("over-strand labels not consecutive at X[" + std::to_string(c.e[0]) + ",...]");
        // with 2 edges both tests pass; prefer the positive reading
        c.sign = d_to_b ? 1 : -1;
    }
    return d;
}

std::string pd_to_string(const KnotDiagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const PdCrossing& c : d.crossings) {
        if (!first) out << " ";
        out << "X[" << c.e[0] << "," << c.e[1] << "," << c.e[2] << "," << c.e[3] << "]";
        first = false;
    }
    return out.str();
}

} // namespace tapoly
