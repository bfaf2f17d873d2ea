#pragma once

// Orbit-count data of a group action on a semimatroid: a finite ground
// set of orbits, a central family with ranks, a positive multiplicity on
// every central set, and optionally the quotient poset of layers with its
// support and closure maps. On top of that: the two-variable polynomial,
// the arithmetic axiom hierarchy, rho, deletion/contraction and the
// basis-activity decomposition.

#include "abelian.hpp"
#include "poset.hpp"
#include "semimatroid.hpp"

#include <map>
#include <optional>

namespace arimat {

struct LayersBlock {
    FinitePoset poset;
    std::vector<Mask> support;                  // per poset node, subset of E
    std::map<std::pair<Mask, int>, int> kappa;  // (central set, 0-based index) -> node
};

struct QuotientData {
    LocallyRankedTriple triple;
    std::unordered_map<Mask, Int> mult;
    std::optional<LayersBlock> layers;

    const std::vector<std::string>& ground() const { return triple.ground; }
    int n() const { return triple.n(); }
    Int m(Mask a) const {
        auto it = mult.find(a);
        if (it == mult.end())
            throw std::invalid_argument("no multiplicity for " + triple.set_str(a));
        return it->second;
    }
    int rk(Mask a) const { return triple.rk(a); }
    int rank() const { return triple.triple_rank(); }
};

inline TripleReport validate_quotient(const QuotientData& d) {
    TripleReport rep = check_locally_ranked(d.triple);
    for (const auto& [a, r] : d.triple.central) {
        auto it = d.mult.find(a);
        if (it == d.mult.end())
            rep.issues.push_back({"mult", "missing multiplicity at " + d.triple.set_str(a)});
        else if (it->second < 1)
            rep.issues.push_back({"mult", "multiplicity below 1 at " + d.triple.set_str(a)});
    }
    for (const auto& [a, v] : d.mult)
        if (!d.triple.is_central(a))
            rep.issues.push_back({"mult", "multiplicity on a non-central set " + d.triple.set_str(a)});
    if (d.layers) {
        const LayersBlock& lb = *d.layers;
        if (int(lb.support.size()) != lb.poset.size())
            rep.issues.push_back({"layers", "support map size differs from the poset"});
        for (const auto& [a, r] : d.triple.central) {
            Int want = d.mult.count(a) ? d.m(a) : Int(0);
            std::vector<int> seen;
            for (Int i = 0; i < want; ++i) {
                auto it = lb.kappa.find({a, int(i.get_si())});
                if (it == lb.kappa.end()) {
                    rep.issues.push_back({"layers", "missing layer assignment for " + d.triple.set_str(a)});
                    continue;
                }
                int node = it->second;
                if (std::find(seen.begin(), seen.end(), node) != seen.end())
                    rep.issues.push_back({"layers", "repeated layer for " + d.triple.set_str(a)});
                seen.push_back(node);
                if ((a & ~lb.support[node]) != 0)
                    rep.issues.push_back({"layers", "layer support does not contain " + d.triple.set_str(a)});
                if (lb.poset.node(node).rank != r)
                    rep.issues.push_back({"layers", "layer rank differs at " + d.triple.set_str(a)});
            }
        }
    }
    return rep;
}

// rho(R, M) = (-1)^|T| sum_{R <= A <= M} (-1)^{|M|-|A|} m(A), where the
// partition of M minus R into (F, T) is forced by single-element ranks and
// verified as a molecule.
inline Int rho(const QuotientData& d, Mask r, Mask m) {
    auto mol = molecule_partition(d.triple, r, m);
    if (!mol) throw std::invalid_argument("not a molecule: " + d.triple.set_str(r) + " in " + d.triple.set_str(m));
    Int acc = 0;
    Mask var = m & ~r;
    int mm = popcount(m);
    for (Mask s = var;; s = (s - 1) & var) {
        Mask a = r | s;
        Int term = d.m(a);
        if ((mm - popcount(a)) % 2 != 0) term = -term;
        acc += term;
        if (s == 0) break;
    }
    if (popcount(mol->t) % 2 != 0) acc = -acc;
    return acc;
}

struct AxiomWitness {
    std::string axiom;
    std::string detail;
};

struct AxiomReport {
    bool locally_ranked = false;
    bool semimatroid = false;
    bool matroid = false;  // centered case: every subset is central
    bool p = false;
    bool a11 = false;
    bool a12 = false;
    bool a2 = false;
    std::vector<AxiomWitness> witnesses;

    bool almost_arithmetic() const { return p && a12 && a2; }
    bool arithmetic() const { return p && a11 && a12 && a2; }
    std::vector<AxiomWitness> witnesses_for(const std::string& axiom) const {
        std::vector<AxiomWitness> out;
        for (const auto& w : witnesses)
            if (w.axiom == axiom) out.push_back(w);
        return out;
    }
};

inline AxiomReport check_axioms(const QuotientData& d) {
    AxiomReport rep;
    rep.locally_ranked = check_locally_ranked(d.triple).ok();
    rep.semimatroid = rep.locally_ranked && check_semimatroid(d.triple).ok();
    rep.matroid = rep.locally_ranked && d.triple.central.size() == (size_t(1) << d.n());
    rep.p = rep.a11 = rep.a12 = rep.a2 = true;
    // (A1) over central single-element extensions
    for (const auto& [a, r] : d.triple.central)
        for (int e = 0; e < d.n(); ++e) {
            if (a & bit(e)) continue;
            if (!d.triple.is_central(a | bit(e))) continue;
            Int ma = d.m(a), mae = d.m(a | bit(e));
            if (d.rk(a | bit(e)) == r) {
                if (ma % mae != 0) {
                    rep.a11 = false;
                    rep.witnesses.push_back(
                        {"A.1.1", "m(" + d.triple.set_str(a | bit(e)) + ")=" + mae.get_str() +
                                      " does not divide m(" + d.triple.set_str(a) + ")=" + ma.get_str()});
                }
            } else {
                if (mae % ma != 0) {
                    rep.a12 = false;
                    rep.witnesses.push_back(
                        {"A.1.2", "m(" + d.triple.set_str(a) + ")=" + ma.get_str() +
                                      " does not divide m(" + d.triple.set_str(a | bit(e)) + ")=" +
                                      mae.get_str()});
                }
            }
        }
    // (P) and (A2) over all molecules
    for (const Molecule& mol : molecules(d.triple)) {
        Mask m = mol.r | mol.f | mol.t;
        Int rho_val = rho(d, mol.r, m);
        if (rho_val < 0) {
            rep.p = false;
            rep.witnesses.push_back({"P", "rho(" + d.triple.set_str(mol.r) + ", " + d.triple.set_str(m) +
                                              ") = " + rho_val.get_str() + " is negative"});
        }
        if (mol.f != 0 && mol.t != 0) {
            if (d.m(mol.r) * d.m(m) != d.m(mol.r | mol.f) * d.m(mol.r | mol.t)) {
                rep.a2 = false;
                rep.witnesses.push_back({"A2", "multiplicativity fails on the molecule (" +
                                                   d.triple.set_str(mol.r) + ", " + d.triple.set_str(mol.f) +
                                                   ", " + d.triple.set_str(mol.t) + ")"});
            }
        }
    }
    return rep;
}

inline BivariatePoly g_tutte(const QuotientData& d) {
    int r = d.rank();
    BivariatePoly acc;
    for (const auto& [a, ra] : d.triple.central)
        acc = acc + d.m(a) * corank_nullity_term(r - ra, popcount(a) - ra);
    return acc;
}

inline QuotientData deletion(const QuotientData& d, int e) {
    if (e < 0 || e >= d.n()) throw std::invalid_argument("element out of range");
    QuotientData out;
    out.triple = deletion(d.triple, bit(e));
    for (const auto& [a, r] : d.triple.central) {
        if (a & bit(e)) continue;
        Mask na = (a & (bit(e) - 1)) | ((a >> (e + 1)) << e);
        out.mult[na] = d.m(a);
    }
    return out;
}

// Ground of the contraction: elements whose orbit pair with e is central.
// Ranks shift by rk(e); the multiplicity of A is the multiplicity of A+e.
inline QuotientData contraction(const QuotientData& d, int e) {
    if (e < 0 || e >= d.n()) throw std::invalid_argument("element out of range");
    int re = d.rk(bit(e));
    QuotientData out;
    std::vector<int> keep;
    for (int i = 0; i < d.n(); ++i)
        if (i != e && d.triple.is_central(bit(i) | bit(e))) {
            keep.push_back(i);
            out.triple.ground.push_back(d.ground()[i]);
        }
    for (const auto& [a, r] : d.triple.central) {
        if (a & bit(e)) continue;
        if (!d.triple.is_central(a | bit(e))) continue;
        Mask na = 0;
        for (size_t k = 0; k < keep.size(); ++k)
            if (a & bit(keep[k])) na |= bit(int(k));
        out.triple.central[na] = d.rk(a | bit(e)) - re;
        out.mult[na] = d.m(a | bit(e));
    }
    return out;
}

inline bool is_loop(const QuotientData& d, int e) { return d.rk(bit(e)) == 0; }

inline bool is_isthmus(const QuotientData& d, int e) {
    for (const auto& [a, r] : d.triple.central) {
        if (a & bit(e)) continue;
        if (!d.triple.is_central(a | bit(e))) return false;
        if (d.rk(a | bit(e)) != r + 1) return false;
    }
    return true;
}

struct DelConResult {
    enum Case { generic, isthmus, loop } kind = generic;
    BivariatePoly total, deleted, contracted;
    bool holds = false;
};

// Verify the deletion/contraction identity in the applicable case.
inline DelConResult check_del_con(const QuotientData& d, int e) {
    DelConResult res;
    res.total = g_tutte(d);
    res.deleted = g_tutte(deletion(d, e));
    res.contracted = g_tutte(contraction(d, e));
    BivariatePoly x1 = corank_nullity_term(1, 0), y1 = corank_nullity_term(0, 1);
    if (is_loop(d, e)) {
        res.kind = DelConResult::loop;
        res.holds = res.total == res.deleted + y1 * res.contracted;
    } else if (is_isthmus(d, e)) {
        res.kind = DelConResult::isthmus;
        res.holds = res.total == x1 * res.deleted + res.contracted;
    } else {
        res.kind = DelConResult::generic;
        res.holds = res.total == res.deleted + res.contracted;
    }
    return res;
}

// Basis-activity decomposition: over every basis B, the product of the
// rho/m polynomial in x over subsets of I(B) and the rho polynomial in y
// over subsets of E(B). Divisions must be exact with nonnegative
// quotients; anything else means the data is not almost-arithmetic.
inline BivariatePoly crapo_decomposition(const QuotientData& d, const GroundOrder& pos) {
    if (!check_semimatroid(d.triple).ok())
        throw std::invalid_argument("activity decomposition requires semimatroid data");
    AxiomReport rep = check_axioms(d);
    if (!rep.almost_arithmetic())
        throw std::invalid_argument("activity decomposition requires (P), (A.1.2) and (A2)");
    BivariatePoly acc;
    for (Mask b : bases(d.triple)) {
        Activities act = activities(d.triple, b, pos);
        Mask rb = b & ~act.internal;
        Int mrb = d.m(rb);
        UniPoly left;
        for (Mask f = act.internal;; f = (f - 1) & act.internal) {
            Int r_val = rho(d, rb, rb | (act.internal & ~f));
            if (r_val % mrb != 0)
                throw std::runtime_error("rho/m division is not exact; data is not almost-arithmetic");
            Int q = r_val / mrb;
            if (q < 0) throw std::runtime_error("negative rho/m quotient; data is not almost-arithmetic");
            left.add_term(popcount(f), q);
            if (f == 0) break;
        }
        UniPoly right;
        for (Mask t = act.external;; t = (t - 1) & act.external) {
            right.add_term(popcount(t), rho(d, rb | t, rb | act.external));
            if (t == 0) break;
        }
        acc = acc + outer_product(left, right);
    }
    return acc;
}

inline bool check_crapo(const QuotientData& d, const GroundOrder& pos) {
    return crapo_decomposition(d, pos) == g_tutte(d);
}

// chi of the layer poset against (-1)^r T(1-t, 0).
inline bool check_theorem_cp_data(const QuotientData& d) {
    if (!d.layers) throw std::invalid_argument("no layer poset attached");
    for (int e = 0; e < d.n(); ++e)
        if (is_loop(d, e)) throw std::invalid_argument("loopless data required");
    int r = d.rank();
    UniPoly chi = char_poly(d.layers->poset, r);
    UniPoly one_minus_t = UniPoly::constant(1) - UniPoly::variable();
    UniPoly rhs = g_tutte(d).substitute(one_minus_t, UniPoly{});
    if (r % 2 != 0) rhs = Int(-1) * rhs;
    return chi == rhs;
}

}  // namespace arimat
