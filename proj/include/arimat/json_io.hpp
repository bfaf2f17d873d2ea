#pragma once

// JSON schemas for the file formats accepted by the command line tool:
//   semimatroid  {"ground":[str], "central":[{"set":[str],"rank":int}]}
//   quotient     semimatroid fields plus "mult" per central entry and an
//                optional "layers" block with elements/covers/kappa
//   arrangement  {"d":int, "columns":[[int,...],...], "offsets":["p/q",...]?}
//   poset        {"elements":[{"id":str,"rank":int}], "covers":[[str,str]]}
//   square       {"corners":{...}, "maps":{...}} with groups given as
//                {"free":int, "torsion":[int,...]} and maps as row-major
//                generator-image matrices or the string "unknown"
// Rationals are strings "p/q"; integers may be JSON numbers or strings.

#include "periodic.hpp"
#include "quotient.hpp"
#include "zmatroid.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace arimat::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream msg;
        msg << path << ": parse error at line " << line << ", column " << col << ": " << e.what();
        throw ParseError(msg.str());
    }
}

inline Int parse_int(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError(std::string("expected an integer for ") + what);
}

inline Rat parse_rational(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        Rat q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw ParseError(std::string("expected a rational string for ") + what);
}

inline std::string rational_str(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {
inline Mask mask_from_labels(const LocallyRankedTriple& t, const json& arr) {
    Mask m = 0;
    for (const auto& l : arr) {
        if (!l.is_string()) throw ParseError("set members must be strings");
        m |= bit(t.index_of(l.get<std::string>()));
    }
    return m;
}
}  // namespace detail

inline LocallyRankedTriple parse_semimatroid(const json& j) {
    if (!j.contains("ground") || !j.contains("central"))
        throw ParseError("semimatroid input needs 'ground' and 'central'");
    LocallyRankedTriple t;
    for (const auto& g : j.at("ground")) t.ground.push_back(g.get<std::string>());
    if (t.n() > max_ground()) throw ParseError("ground set exceeds the enumeration bound");
    for (const auto& entry : j.at("central")) {
        Mask m = detail::mask_from_labels(t, entry.at("set"));
        if (t.central.count(m)) throw ParseError("duplicate central set " + t.set_str(m));
        t.central[m] = entry.at("rank").get<int>();
    }
    return t;
}

inline FinitePoset parse_poset(const json& j) {
    if (!j.contains("elements") || !j.contains("covers"))
        throw ParseError("poset input needs 'elements' and 'covers'");
    std::vector<FinitePoset::Node> nodes;
    for (const auto& e : j.at("elements")) {
        FinitePoset::Node n;
        n.id = e.at("id").get<std::string>();
        if (e.contains("rank")) n.rank = e.at("rank").get<int>();
        nodes.push_back(std::move(n));
    }
    auto index_of = [&](const std::string& id) {
        for (int i = 0; i < int(nodes.size()); ++i)
            if (nodes[i].id == id) return i;
        throw ParseError("unknown poset element: " + id);
    };
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw ParseError("covers must be [lower, upper] pairs");
        covers.push_back({index_of(c[0].get<std::string>()), index_of(c[1].get<std::string>())});
    }
    try {
        return FinitePoset(nodes, covers);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline QuotientData parse_quotient(const json& j) {
    QuotientData d;
    d.triple = parse_semimatroid(j);
    for (const auto& entry : j.at("central")) {
        Mask m = detail::mask_from_labels(d.triple, entry.at("set"));
        if (!entry.contains("mult")) throw ParseError("quotient entries need 'mult'");
        d.mult[m] = parse_int(entry.at("mult"), "mult");
    }
    if (j.contains("layers")) {
        const json& lj = j.at("layers");
        LayersBlock lb;
        std::vector<FinitePoset::Node> nodes;
        std::vector<Mask> supports;
        for (const auto& e : lj.at("elements")) {
            nodes.push_back({e.at("id").get<std::string>(), e.at("rank").get<int>()});
            supports.push_back(detail::mask_from_labels(d.triple, e.at("support")));
        }
        auto index_of = [&](const std::string& id) {
            for (int i = 0; i < int(nodes.size()); ++i)
                if (nodes[i].id == id) return i;
            throw ParseError("unknown layer: " + id);
        };
        std::vector<std::pair<int, int>> covers;
        for (const auto& c : lj.at("covers"))
            covers.push_back({index_of(c[0].get<std::string>()), index_of(c[1].get<std::string>())});
        try {
            lb.poset = FinitePoset(nodes, covers);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        lb.support = std::move(supports);
        std::map<Mask, int> next_index;
        for (const auto& k : lj.at("kappa")) {
            Mask m = detail::mask_from_labels(d.triple, k.at("set"));
            lb.kappa[{m, next_index[m]++}] = index_of(k.at("layer").get<std::string>());
        }
        d.layers = std::move(lb);
    }
    return d;
}

inline PeriodicArrangement parse_arrangement(const json& j) {
    if (!j.contains("d") || !j.contains("columns"))
        throw ParseError("arrangement input needs 'd' and 'columns'");
    int d = j.at("d").get<int>();
    const json& cols = j.at("columns");
    IntMatrix a(d, int(cols.size()));
    for (int c = 0; c < int(cols.size()); ++c) {
        if (int(cols[c].size()) != d) throw ParseError("column length differs from 'd'");
        for (int r = 0; r < d; ++r) a(r, c) = parse_int(cols[c][r], "column entry");
    }
    std::vector<Rat> offsets;
    if (j.contains("offsets"))
        for (const auto& o : j.at("offsets")) offsets.push_back(parse_rational(o, "offset"));
    try {
        return make_arrangement(d, std::move(a), std::move(offsets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline Presentation parse_group(const json& j) {
    if (!j.contains("free") || !j.contains("torsion"))
        throw ParseError("groups are given as {\"free\":int, \"torsion\":[int,...]}");
    std::vector<Int> factors;
    for (const auto& t : j.at("torsion")) factors.push_back(parse_int(t, "torsion factor"));
    try {
        return presentation_of(make_fg_ab_group(j.at("free").get<int>(), std::move(factors)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline std::optional<IntMatrix> parse_map(const json& j, int target_ambient, int source_ambient) {
    if (j.is_string()) {
        if (j.get<std::string>() == "unknown") return std::nullopt;
        throw ParseError("maps are matrices or the string \"unknown\"");
    }
    IntMatrix m(target_ambient, source_ambient);
    if (int(j.size()) != target_ambient) throw ParseError("map row count differs from the target rank");
    for (int i = 0; i < target_ambient; ++i) {
        if (int(j[i].size()) != source_ambient)
            throw ParseError("map column count differs from the source rank");
        for (int c = 0; c < source_ambient; ++c) m(i, c) = parse_int(j[i][c], "map entry");
    }
    return m;
}

inline SquareDiagram parse_square(const json& j) {
    if (!j.contains("corners") || !j.contains("maps"))
        throw ParseError("square input needs 'corners' and 'maps'");
    const json& c = j.at("corners");
    SquareDiagram sq;
    sq.tl = parse_group(c.at("top_left"));
    sq.tr = parse_group(c.at("top_right"));
    sq.bl = parse_group(c.at("bottom_left"));
    sq.br = parse_group(c.at("bottom_right"));
    const json& m = j.at("maps");
    sq.top = parse_map(m.at("top"), sq.tr.ambient, sq.tl.ambient);
    sq.left = parse_map(m.at("left"), sq.bl.ambient, sq.tl.ambient);
    sq.right = parse_map(m.at("right"), sq.br.ambient, sq.tr.ambient);
    sq.bottom = parse_map(m.at("bottom"), sq.br.ambient, sq.bl.ambient);
    return sq;
}

enum class InputKind { semimatroid, quotient, arrangement, poset, square, unknown };

inline InputKind classify(const json& j) {
    if (!j.is_object()) return InputKind::unknown;
    if (j.contains("corners") && j.contains("maps")) return InputKind::square;
    if (j.contains("d") && j.contains("columns")) return InputKind::arrangement;
    if (j.contains("elements") && j.contains("covers")) return InputKind::poset;
    if (j.contains("ground") && j.contains("central")) {
        for (const auto& e : j.at("central"))
            if (e.contains("mult")) return InputKind::quotient;
        return InputKind::semimatroid;
    }
    return InputKind::unknown;
}

// --- emission ---

inline json emit_poset(const FinitePoset& p,
                       const std::vector<std::vector<std::string>>* supports = nullptr) {
    json elements = json::array();
    for (int i = 0; i < p.size(); ++i) {
        json e = {{"id", p.node(i).id}, {"rank", p.node(i).rank}};
        if (supports) e["support"] = (*supports)[i];
        elements.push_back(std::move(e));
    }
    json covers = json::array();
    for (int i = 0; i < p.size(); ++i)
        for (int k : p.covers_up(i)) covers.push_back({p.node(i).id, p.node(k).id});
    return json{{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

inline json emit_poly(const BivariatePoly& p) {
    json terms = json::array();
    for (const auto& [e, v] : p.c)
        terms.push_back({{"x", e.first}, {"y", e.second}, {"coef", v.get_str()}});
    return json{{"vars", {"x", "y"}}, {"terms", std::move(terms)}};
}

inline json emit_poly(const UniPoly& p) {
    json terms = json::array();
    for (const auto& [e, v] : p.c) terms.push_back({{"t", e}, {"coef", v.get_str()}});
    return json{{"vars", {"t"}}, {"terms", std::move(terms)}};
}

}  // namespace arimat::io
