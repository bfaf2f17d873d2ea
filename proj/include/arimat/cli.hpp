#pragma once

// Command line front end. One subcommand per invocation:
//   validate, tutte, charpoly, layers, arithcheck, delcon, crapo,
//   crypto, zmatroid, duality, square
// Exit codes: 0 all checks pass, 1 a checked identity or axiom fails
// (witnesses on stdout), 2 input error.

#include "geomsl.hpp"
#include "json_io.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace arimat::cli {

namespace detail {

inline std::vector<std::vector<std::string>> layer_supports(const PeriodicArrangement& arr,
                                                            const LayerPoset& lp) {
    std::vector<std::vector<std::string>> out;
    for (const Layer& l : lp.layers) {
        std::vector<std::string> s;
        for (int i = 0; i < arr.n(); ++i)
            if (l.support & bit(i)) s.push_back(std::to_string(i + 1));
        out.push_back(std::move(s));
    }
    return out;
}

inline std::string layer_dot(const LayerPoset& lp, const PeriodicArrangement& arr) {
    std::ostringstream out;
    out << "digraph layers {\n  rankdir=BT;\n";
    for (int i = 0; i < lp.poset.size(); ++i) {
        const Layer& l = lp.layers[i];
        std::string spaced;
        for (char c : l.id(arr))
            if (c == '|') spaced += " | ";
            else spaced += c;
        out << "  n" << i << " [label=\"" << spaced << "\", rank=" << lp.poset.node(i).rank << "];\n";
    }
    for (int i = 0; i < lp.poset.size(); ++i)
        for (int j : lp.poset.covers_up(i)) out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

inline GroundOrder order_from_csv(const LocallyRankedTriple& t, const std::string& csv) {
    if (csv.empty()) return default_order(t);
    GroundOrder pos(t.n(), -1);
    std::stringstream ss(csv);
    std::string item;
    int next = 0;
    while (std::getline(ss, item, ',')) pos[t.index_of(item)] = next++;
    if (next != t.n()) throw std::invalid_argument("order must list every ground element");
    return pos;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"exact computations for group actions on semimatroids"};
    app.require_subcommand(1);

    std::string path, element, order_csv, format = "text";
    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("input", path, "input JSON file")->required();
        if (with_format) sub->add_option("--format", format, "text | json | dot");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "axiom reports for a data file");
    add_common(c_validate, false);
    CLI::App* c_tutte = app.add_subcommand("tutte", "polynomial of an arrangement, quotient or semimatroid");
    add_common(c_tutte);
    CLI::App* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a poset or arrangement");
    add_common(c_charpoly);
    CLI::App* c_layers = app.add_subcommand("layers", "poset of layers of an arrangement");
    add_common(c_layers);
    CLI::App* c_arith = app.add_subcommand("arithcheck", "arithmetic axiom hierarchy of quotient data");
    add_common(c_arith, false);
    CLI::App* c_delcon = app.add_subcommand("delcon", "deletion/contraction identity at one element");
    add_common(c_delcon, false);
    c_delcon->add_option("element", element, "ground element label")->required();
    CLI::App* c_crapo = app.add_subcommand("crapo", "basis-activity decomposition of quotient data");
    add_common(c_crapo, false);
    c_crapo->add_option("--order", order_csv, "comma-separated ground order");
    CLI::App* c_crypto = app.add_subcommand("crypto", "round trip between semimatroids and semilattices");
    add_common(c_crypto, false);
    CLI::App* c_zmat = app.add_subcommand("zmatroid", "module table of an integer matrix");
    add_common(c_zmat, false);
    CLI::App* c_dual = app.add_subcommand("duality", "duality of the module data against the matrix data");
    add_common(c_dual, false);
    CLI::App* c_square = app.add_subcommand("square", "completions of a partially known square");
    add_common(c_square, false);

    std::vector<const char*> argv;
    argv.push_back("arimat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        io::json j = io::load_json_file(path);
        io::InputKind kind = io::classify(j);

        if (app.got_subcommand(c_validate)) {
            switch (kind) {
                case io::InputKind::semimatroid: {
                    LocallyRankedTriple t = io::parse_semimatroid(j);
                    TripleReport r1 = check_locally_ranked(t);
                    TripleReport r2 = r1.ok() ? check_semimatroid(t) : TripleReport{};
                    for (const auto& i : r1.issues) out << "(" << i.axiom << ") " << i.detail << "\n";
                    for (const auto& i : r2.issues) out << "(" << i.axiom << ") " << i.detail << "\n";
                    bool ok = r1.ok() && r2.ok();
                    out << (ok ? "valid semimatroid\n" : "invalid\n");
                    return ok ? 0 : 1;
                }
                case io::InputKind::quotient: {
                    QuotientData d = io::parse_quotient(j);
                    TripleReport r = validate_quotient(d);
                    for (const auto& i : r.issues) out << "(" << i.axiom << ") " << i.detail << "\n";
                    out << (r.ok() ? "valid quotient data\n" : "invalid\n");
                    return r.ok() ? 0 : 1;
                }
                case io::InputKind::poset: {
                    FinitePoset p = io::parse_poset(j);
                    PosetReport r = check_geometric_semilattice(p);
                    for (const auto& i : r.issues) out << "(" << i.axiom << ") " << i.detail << "\n";
                    out << (r.ok() ? "geometric semilattice\n" : "not a geometric semilattice\n");
                    return r.ok() ? 0 : 1;
                }
                case io::InputKind::arrangement: {
                    PeriodicArrangement arr = io::parse_arrangement(j);
                    out << "arrangement with " << arr.n() << " columns in dimension " << arr.d
                        << (arr.centered() ? ", centered" : ", with offsets") << "\n";
                    return 0;
                }
                default: throw io::ParseError("unrecognized input schema");
            }
        }

        if (app.got_subcommand(c_tutte)) {
            BivariatePoly p;
            if (kind == io::InputKind::quotient) p = g_tutte(io::parse_quotient(j));
            else if (kind == io::InputKind::semimatroid) p = tutte(io::parse_semimatroid(j));
            else if (kind == io::InputKind::arrangement) p = g_tutte(quotient_data(io::parse_arrangement(j)));
            else throw io::ParseError("tutte expects a quotient, semimatroid or arrangement");
            if (format == "json") out << io::emit_poly(p).dump() << "\n";
            else out << to_string(p) << "\n";
            return 0;
        }

        if (app.got_subcommand(c_charpoly)) {
            UniPoly chi;
            if (kind == io::InputKind::poset) {
                chi = char_poly(io::parse_poset(j));
            } else if (kind == io::InputKind::arrangement) {
                PeriodicArrangement arr = io::parse_arrangement(j);
                chi = char_poly(layer_poset(arr).poset, rank(arr.a));
            } else {
                throw io::ParseError("charpoly expects a poset or arrangement");
            }
            if (format == "json") out << io::emit_poly(chi).dump() << "\n";
            else out << to_string(chi, "t") << "\n";
            return 0;
        }

        if (app.got_subcommand(c_layers)) {
            if (kind != io::InputKind::arrangement) throw io::ParseError("layers expects an arrangement");
            PeriodicArrangement arr = io::parse_arrangement(j);
            LayerPoset lp = layer_poset(arr);
            if (format == "dot") {
                out << detail::layer_dot(lp, arr);
            } else if (format == "json") {
                auto sup = detail::layer_supports(arr, lp);
                out << io::emit_poset(lp.poset, &sup).dump() << "\n";
            } else {
                out << lp.poset.size() << " layers\n";
                for (int i = 0; i < lp.poset.size(); ++i) out << lp.poset.node(i).id << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(c_arith)) {
            if (kind != io::InputKind::quotient) throw io::ParseError("arithcheck expects quotient data");
            QuotientData d = io::parse_quotient(j);
            TripleReport structural = validate_quotient(d);
            if (!structural.ok()) throw io::ParseError("invalid quotient data:\n" + structural.summary());
            AxiomReport rep = check_axioms(d);
            out << "locally ranked: " << (rep.locally_ranked ? "yes" : "no") << "\n";
            out << "semimatroid: " << (rep.semimatroid ? "yes" : "no") << "\n";
            out << "matroid: " << (rep.matroid ? "yes" : "no") << "\n";
            out << "(P): " << (rep.p ? "pass" : "fail") << "\n";
            out << "(A.1.1): " << (rep.a11 ? "pass" : "fail") << "\n";
            out << "(A.1.2): " << (rep.a12 ? "pass" : "fail") << "\n";
            out << "(A2): " << (rep.a2 ? "pass" : "fail") << "\n";
            for (const auto& w : rep.witnesses) out << "(" << w.axiom << "): " << w.detail << "\n";
            return rep.arithmetic() ? 0 : 1;
        }

        if (app.got_subcommand(c_delcon)) {
            if (kind != io::InputKind::quotient) throw io::ParseError("delcon expects quotient data");
            QuotientData d = io::parse_quotient(j);
            DelConResult res = check_del_con(d, d.triple.index_of(element));
            out << "T = " << to_string(res.total) << "\n";
            out << "T_del = " << to_string(res.deleted) << "\n";
            out << "T_con = " << to_string(res.contracted) << "\n";
            out << "case: "
                << (res.kind == DelConResult::loop       ? "loop"
                    : res.kind == DelConResult::isthmus ? "isthmus"
                                                        : "generic")
                << "\n";
            out << "identity: " << (res.holds ? "holds" : "FAILS") << "\n";
            return res.holds ? 0 : 1;
        }

        if (app.got_subcommand(c_crapo)) {
            if (kind != io::InputKind::quotient) throw io::ParseError("crapo expects quotient data");
            QuotientData d = io::parse_quotient(j);
            GroundOrder pos = detail::order_from_csv(d.triple, order_csv);
            BivariatePoly dec = crapo_decomposition(d, pos);
            out << "decomposition = " << to_string(dec) << "\n";
            bool ok = dec == g_tutte(d);
            out << "matches polynomial: " << (ok ? "yes" : "NO") << "\n";
            return ok ? 0 : 1;
        }

        if (app.got_subcommand(c_crypto)) {
            RoundTripResult res;
            if (kind == io::InputKind::semimatroid) res = roundtrip_semimatroid(io::parse_semimatroid(j));
            else if (kind == io::InputKind::poset) res = roundtrip_semilattice(io::parse_poset(j));
            else throw io::ParseError("crypto expects a semimatroid or poset");
            out << "round trip: " << (res.ok ? "verified" : "FAILED") << "\n";
            if (!res.ok) out << res.detail << "\n";
            return res.ok ? 0 : 1;
        }

        if (app.got_subcommand(c_zmat)) {
            if (kind != io::InputKind::arrangement) throw io::ParseError("zmatroid expects a matrix input");
            PeriodicArrangement arr = io::parse_arrangement(j);
            ZMatroid z = from_matrix(arr.a);
            for (Mask a = 0;; ++a) {
                std::string s = "{";
                bool first = true;
                for (int i = 0; i < z.n; ++i)
                    if (a & bit(i)) {
                        if (!first) s += ",";
                        s += std::to_string(i + 1);
                        first = false;
                    }
                s += "}";
                out << s << ": " << z.module_of(a).invariants().str() << "\n";
                if (a == bit(z.n) - 1) break;
            }
            ZMatroidReport rep = check_zmatroid(z);
            for (const auto& f : rep.failures) out << f << "\n";
            out << "square conditions: " << (rep.ok() ? "pass" : "fail") << "\n";
            return rep.ok() ? 0 : 1;
        }

        if (app.got_subcommand(c_dual)) {
            if (kind != io::InputKind::arrangement) throw io::ParseError("duality expects a matrix input");
            PeriodicArrangement arr = io::parse_arrangement(j);
            bool ok = check_duality(arr.a);
            out << "duality: " << (ok ? "holds" : "FAILS") << "\n";
            return ok ? 0 : 1;
        }

        if (app.got_subcommand(c_square)) {
            if (kind != io::InputKind::square) throw io::ParseError("square expects a diagram input");
            SquareDiagram sq = io::parse_square(j);
            CompletionReport rep = complete_square(sq);
            out << "candidates: " << rep.candidates.size() << "\n";
            for (size_t i = 0; i < rep.candidates.size(); ++i) {
                const auto& c = rep.candidates[i];
                out << "candidate " << (i + 1) << ": top=" << c.top.str() << " left=" << c.left.str()
                    << " right=" << c.right.str() << " bottom=" << c.bottom.str()
                    << (c.commutes ? " commutes" : " does-not-commute")
                    << (c.is_pushout ? " pushout" : " not-a-pushout") << "\n";
            }
            out << "satisfiable: " << (rep.satisfiable ? "yes" : "no") << "\n";
            return rep.satisfiable ? 0 : 1;
        }

        throw io::ParseError("no subcommand selected");
    } catch (const io::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace arimat::cli
