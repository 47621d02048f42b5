#include "tapoly/wirtinger.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tapoly {

namespace {

// true iff r = W y W^-1 z^-1 with y, z single positive letters and W any
// (possibly empty) word
bool is_conjugation_relator(const Word& r) {
    const auto& ls = r.letters();
    size_t n = ls.size();
    if (n < 2 || n % 2 != 0) return false;
    size_t m = n / 2 - 1; // |W|
    if (ls[m] <= 0 || ls[n - 1] >= 0) return false;
    for (size_t i = 0; i < m; ++i)
        if (ls[i] != -ls[n - 2 - i]) return false;
    return true;
}

// rotate a crossing relator into conjugation shape; kink crossings reduce
// to two letters in an arbitrary orientation
Word normalize_relator(Word r) {
    // cyclic reduction
    while (r.length() >= 2 && r.letters().front() == -r.letters().back()) {
        std::vector<Letter> ls(r.letters().begin() + 1, r.letters().end() - 1);
        r = Word::from_letters(ls);
    }
    if (is_conjugation_relator(r)) return r;
    std::vector<Letter> ls = r.letters();
    for (size_t shift = 1; shift < ls.size(); ++shift) {
        std::rotate(ls.begin(), ls.begin() + 1, ls.end());
        Word rotated = Word::from_letters(ls);
        if (is_conjugation_relator(rotated)) return rotated;
    }
    return r;
}

// rank over Q of the relator exponent-sum matrix, by fraction-free elimination
int abelianization_rank(const GroupPresentation& g) {
    std::vector<std::vector<i64>> m;
    for (const Word& r : g.relators) {
        std::vector<i64> row(g.gen_count, 0);
        for (Letter l : r.letters()) row[letter_gen(l)] += letter_sign(l);
        m.push_back(std::move(row));
    }
    int rank = 0;
    int rows = static_cast<int>(m.size());
    for (int col = 0; col < g.gen_count && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            i64 a = m[rank][col], b = m[r][col];
            i64 g2 = gcd_i64(a, b);
            i64 fa = b / g2, fb = a / g2;
            for (int c = col; c < g.gen_count; ++c)
                m[r][c] = checked_add(checked_mul(m[r][c], fb), -checked_mul(m[rank][c], fa));
        }
        ++rank;
    }
    return rank;
}

} // namespace

void validate(const WirtingerData& w) {
    w.pres.validate();
    if (static_cast<int>(w.gen_names.size()) != w.pres.gen_count)
        throw error("generator name count mismatch");
    for (const Word& r : w.pres.relators)
        if (!is_conjugation_relator(r))
            throw error("relator is not of conjugation shape in '" + w.name + "'");
    if (w.meridian.exponent_sum() != 1)
        throw error("meridian exponent sum must be 1");
    if (w.meridian.max_gen_index() >= w.pres.gen_count) throw error("meridian out of range");
    if (w.longitude) {
        if (w.longitude->exponent_sum() != 0) throw error("longitude exponent sum must be 0");
        if (w.longitude->max_gen_index() >= w.pres.gen_count) throw error("longitude out of range");
    }
    if (abelianization_rank(w.pres) != w.pres.gen_count - 1)
        throw error("abelianization of '" + w.name + "' is not infinite cyclic");
}

WirtingerData wirtinger(const KnotDiagram& d, const std::string& name, int dropped) {
    const int n = d.crossing_count();
    if (n == 0) throw error("empty diagram");
    const int edges = 2 * n;
    if (dropped < 0) dropped = n - 1;
    if (dropped >= n) throw error("dropped relator index out of range");

    // arcs: join the over-in and over-out edge of every crossing
    std::vector<int> parent(edges + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const PdCrossing& c : d.crossings) parent[find(c.over_in())] = find(c.over_out());

    // number arcs by smallest member edge; arc of edge 1 becomes generator 0
    std::map<int, int> root_to_arc;
    std::vector<int> arc_of(edges + 1, -1);
    for (int e = 1; e <= edges; ++e) {
        int r = find(e);
        if (!root_to_arc.count(r)) {
            int idx = static_cast<int>(root_to_arc.size());
            root_to_arc[r] = idx;
        }
    }
    // remap so arcs are ordered by their smallest edge
    std::vector<int> smallest(root_to_arc.size(), edges + 1);
    for (int e = 1; e <= edges; ++e) smallest[root_to_arc[find(e)]] = std::min(smallest[root_to_arc[find(e)]], e);
    std::vector<int> order(root_to_arc.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return smallest[a] < smallest[b]; });
    std::vector<int> rank(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    for (int e = 1; e <= edges; ++e) arc_of[e] = rank[root_to_arc[find(e)]];

    const int u = static_cast<int>(root_to_arc.size());
    if (u != n) throw error("arc count does not match crossing count");

    WirtingerData w;
    w.name = name;
    w.pres.gen_count = u;
    w.gen_names = default_names(u);

    // relator at a crossing: over o, under a -> c:
    //   positive: o a o^-1 c^-1     negative: o^-1 a o c^-1
    for (int i = 0; i < n; ++i) {
        if (i == dropped) continue;
        const PdCrossing& c = d.crossings[i];
        int o = arc_of[c.over_in()];
        int a = arc_of[c.under_in()];
        int cc = arc_of[c.under_out()];
        std::vector<Letter> r;
        r.push_back(make_letter(o, c.sign));
        r.push_back(make_letter(a, 1));
        r.push_back(make_letter(o, -c.sign));
        r.push_back(make_letter(cc, -1));
        w.pres.relators.push_back(normalize_relator(Word::from_letters(r)));
    }

    w.meridian = Word::gen(arc_of[1]);

    // longitude: walk the knot from edge 1, record the over-arc (signed to
    // match the relator convention above) at each under-passage, then cancel
    // the framing with a meridian power so the exponent sum is zero
    std::map<int, const PdCrossing*> under_at_end;
    for (const PdCrossing& c : d.crossings) under_at_end[c.under_in()] = &c;
    std::vector<Letter> lon;
    int e = 1;
    for (int step = 0; step < edges; ++step) {
        auto it = under_at_end.find(e);
        if (it != under_at_end.end()) {
            const PdCrossing& c = *it->second;
            lon.push_back(make_letter(arc_of[c.over_in()], -c.sign));
            e = c.under_out();
        } else {
            // passes over some crossing; find it
            const PdCrossing* over = nullptr;
            for (const PdCrossing& c : d.crossings)
                if (c.over_in() == e) {
                    over = &c;
                    break;
                }
            if (!over) throw error("inconsistent diagram traversal");
            e = over->over_out();
        }
    }
    Word l = Word::from_letters(lon) * w.meridian.pow(d.writhe());
    w.longitude = l;

    validate(w);
    return w;
}

WirtingerData two_bridge(i64 p, i64 q, const std::string& name) {
    if (p < 3 || p % 2 == 0) throw error("two_bridge: p must be an odd integer >= 3");
    if (q < 1 || q >= p || q % 2 == 0 || gcd_i64(p, q) != 1)
        throw error("two_bridge: q must be odd with 0 < q < p and gcd(p,q) = 1");
    WirtingerData w;
    w.name = name;
    w.pres.gen_count = 2;
    w.gen_names = {"a", "b"};
    std::vector<Letter> ww;
    for (i64 i = 1; i <= p - 1; ++i) {
        int sign = ((i * q / p) % 2 == 0) ? 1 : -1;
        int gen = (i % 2 == 1) ? 0 : 1; // alternate a, b, a, b, ...
        ww.push_back(make_letter(gen, sign));
    }
    Word W = Word::from_letters(ww);
    Word relator = W * Word::gen(0) * W.inverse() * Word::gen(1, -1);
    w.pres.relators.push_back(relator);
    w.meridian = Word::gen(0);
    validate(w);
    return w;
}

// ---- files ---------------------------------------------------------------

std::string presentation_to_string(const WirtingerData& w) {
    std::ostringstream out;
    if (!w.name.empty()) out << "name: " << w.name << "\n";
    out << "gens:";
    for (const auto& nm : w.gen_names) out << " " << nm;
    out << "\n";
    for (const Word& r : w.pres.relators) out << "rel: " << word_to_string(r, w.gen_names) << "\n";
    out << "meridian: " << word_to_string(w.meridian, w.gen_names) << "\n";
    if (w.longitude) out << "longitude: " << word_to_string(*w.longitude, w.gen_names) << "\n";
    return out.str();
}

WirtingerData parse_presentation(const std::string& text) {
    WirtingerData w;
    bool have_gens = false, have_meridian = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw error("presentation file: missing ':' in line '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (key == "name") {
            size_t b = value.find_first_not_of(" \t");
            w.name = b == std::string::npos ? "" : value.substr(b);
        } else if (key == "gens") {
            std::istringstream vs(value);
            std::string nm;
            while (vs >> nm) w.gen_names.push_back(nm);
            w.pres.gen_count = static_cast<int>(w.gen_names.size());
            have_gens = true;
        } else if (key == "rel") {
            if (!have_gens) throw error("presentation file: 'rel' before 'gens'");
            w.pres.relators.push_back(parse_word(value, w.gen_names));
        } else if (key == "meridian") {
            if (!have_gens) throw error("presentation file: 'meridian' before 'gens'");
            w.meridian = parse_word(value, w.gen_names);
            have_meridian = true;
        } else if (key == "longitude") {
            if (!have_gens) throw error("presentation file: 'longitude' before 'gens'");
            w.longitude = parse_word(value, w.gen_names);
        } else {
            throw error("presentation file: unknown key '" + key + "'");
        }
    }
    if (!have_gens) throw error("presentation file: no 'gens' line");
    if (!have_meridian) w.meridian = Word::gen(0);
    validate(w);
    return w;
}

std::vector<std::pair<std::string, KnotDiagram>> parse_pd_file(const std::string& text) {
    std::vector<std::pair<std::string, KnotDiagram>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw pd_error(PdErrorKind::syntax, "PD file: missing ':' in line '" + line + "'");
        std::string name = line.substr(0, colon);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        out.emplace_back(name, parse_pd(line.substr(colon + 1)));
    }
    return out;
}

std::string pd_file_to_string(const std::vector<std::pair<std::string, KnotDiagram>>& knots) {
    std::ostringstream out;
    for (const auto& [name, d] : knots) out << name << ": " << pd_to_string(d) << "\n";
    return out.str();
}

} // namespace tapoly
