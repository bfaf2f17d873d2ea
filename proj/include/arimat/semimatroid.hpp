#pragma once

// Finite semimatroids and locally ranked triples: rank axioms, closure,
// flats, deletion/contraction, Tutte polynomials, bases, activities and
// molecules. Central families are stored explicitly as bitsets over the
// ground order; operations enumerate subsets, so the supported envelope
// is |ground| <= 20 (see max_ground()).

#include "poly.hpp"
#include "poset.hpp"

#include <cstdint>
#include <cstdlib>
#include <unordered_map>

namespace arimat {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask bit(int i) { return Mask(1) << i; }

// Enumeration cap, overridable through the TT_MAX_GROUND variable.
inline int max_ground() {
    if (const char* s = std::getenv("TT_MAX_GROUND")) {
        int v = std::atoi(s);
        if (v > 0 && v <= 30) return v;
    }
    return 20;
}

struct LocallyRankedTriple {
    std::vector<std::string> ground;        // stable labels, index order fixed
    std::unordered_map<Mask, int> central;  // central set -> rank

    int n() const { return int(ground.size()); }
    bool is_central(Mask x) const { return central.count(x) > 0; }
    int rk(Mask x) const {
        auto it = central.find(x);
        if (it == central.end()) throw std::invalid_argument("set is not central: " + set_str(x));
        return it->second;
    }
    int triple_rank() const {
        int r = 0;
        for (const auto& [m, v] : central) r = std::max(r, v);
        return r;
    }
    int index_of(const std::string& label) const {
        for (int i = 0; i < n(); ++i)
            if (ground[i] == label) return i;
        throw std::invalid_argument("unknown ground element: " + label);
    }
    std::string set_str(Mask x) const {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < n(); ++i)
            if (x & bit(i)) {
                if (!first) s += ",";
                s += ground[i];
                first = false;
            }
        return s + "}";
    }
    std::vector<Mask> central_sets() const {
        std::vector<Mask> out;
        out.reserve(central.size());
        for (const auto& [m, v] : central) out.push_back(m);
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct TripleIssue {
    std::string axiom;
    std::string detail;
};

struct TripleReport {
    std::vector<TripleIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& i : issues) s += "(" + i.axiom + ") " + i.detail + "\n";
        return s;
    }
};

// (R1)-(R3) plus the basic shape requirements: the central family is a
// simplicial complex containing the empty set and every singleton, and
// rank(empty) = 0.
inline TripleReport check_locally_ranked(const LocallyRankedTriple& t) {
    TripleReport rep;
    if (t.n() > max_ground())
        rep.issues.push_back({"size", "ground exceeds the supported enumeration bound"});
    if (!t.is_central(0))
        rep.issues.push_back({"complex", "empty set is not central"});
    else if (t.rk(0) != 0)
        rep.issues.push_back({"complex", "rank of the empty set is nonzero"});
    for (int i = 0; i < t.n(); ++i)
        if (!t.is_central(bit(i)))
            rep.issues.push_back({"complex", "singleton " + t.set_str(bit(i)) + " is not central"});
    auto sets = t.central_sets();
    for (Mask x : sets)
        for (int i = 0; i < t.n(); ++i)
            if ((x & bit(i)) && !t.is_central(x & ~bit(i))) {
                rep.issues.push_back({"complex", "family is not downward closed at " + t.set_str(x)});
                break;
            }
    if (!rep.ok()) return rep;  // rank conditions assume a valid complex
    for (Mask x : sets) {
        int r = t.rk(x);
        if (r < 0 || r > popcount(x))
            rep.issues.push_back({"R1", "0 <= rk <= |X| fails at " + t.set_str(x)});
        for (int i = 0; i < t.n(); ++i)
            if ((x & bit(i)) && t.rk(x & ~bit(i)) > r)
                rep.issues.push_back({"R2", "monotonicity fails at " + t.set_str(x & ~bit(i)) +
                                                " inside " + t.set_str(x)});
    }
    for (Mask x : sets)
        for (Mask y : sets) {
            if (x >= y) continue;
            if (!t.is_central(x | y)) continue;
            if (t.rk(x) + t.rk(y) < t.rk(x | y) + t.rk(x & y))
                rep.issues.push_back({"R3", "submodularity fails at " + t.set_str(x) + ", " + t.set_str(y)});
        }
    return rep;
}

// (CR1) and (CR2); also verifies the derived forms (CR1') and (CR2').
inline TripleReport check_semimatroid(const LocallyRankedTriple& t) {
    TripleReport rep;
    auto sets = t.central_sets();
    for (Mask x : sets)
        for (Mask y : sets) {
            if (x == y) continue;
            if (t.rk(x) == t.rk(x & y)) {
                if (!t.is_central(x | y)) {
                    rep.issues.push_back({"CR1", "union of " + t.set_str(x) + " and " + t.set_str(y) +
                                                     " escapes the central family"});
                } else if (t.rk(x | y) != t.rk(y)) {
                    rep.issues.push_back({"CR1'", "rank of " + t.set_str(x | y) + " differs from rank of " +
                                                      t.set_str(y)});
                }
            }
            if (t.rk(x) < t.rk(y)) {
                bool cr2 = false, cr2p = false;
                for (int i = 0; i < t.n(); ++i) {
                    if (!(y & bit(i)) || (x & bit(i))) continue;
                    if (t.is_central(x | bit(i))) {
                        cr2 = true;
                        if (t.rk(x | bit(i)) == t.rk(x) + 1) cr2p = true;
                    }
                }
                if (!cr2)
                    rep.issues.push_back({"CR2", "no feasible extension of " + t.set_str(x) + " toward " +
                                                     t.set_str(y)});
                else if (!cr2p)
                    rep.issues.push_back({"CR2'", "no rank-increasing extension of " + t.set_str(x) +
                                                      " toward " + t.set_str(y)});
            }
        }
    return rep;
}

inline Mask closure(const LocallyRankedTriple& t, Mask x) {
    int r = t.rk(x);  // throws when x is not central
    Mask cl = x;
    for (int i = 0; i < t.n(); ++i)
        if (!(x & bit(i)) && t.is_central(x | bit(i)) && t.rk(x | bit(i)) == r) cl |= bit(i);
    return cl;
}

inline std::vector<Mask> flats(const LocallyRankedTriple& t) {
    std::vector<Mask> out;
    for (Mask x : t.central_sets())
        if (closure(t, x) == x) out.push_back(x);
    return out;
}

inline FinitePoset flats_poset(const LocallyRankedTriple& t) {
    std::vector<Mask> fl = flats(t);
    std::vector<FinitePoset::Node> nodes;
    for (Mask f : fl) nodes.push_back({t.set_str(f), t.rk(f)});
    std::vector<std::vector<bool>> leq(fl.size(), std::vector<bool>(fl.size(), false));
    for (size_t i = 0; i < fl.size(); ++i)
        for (size_t j = 0; j < fl.size(); ++j) leq[i][j] = (fl[i] & ~fl[j]) == 0;
    return FinitePoset::from_leq(std::move(nodes), leq);
}

inline LocallyRankedTriple deletion(const LocallyRankedTriple& t, Mask drop) {
    LocallyRankedTriple out;
    std::vector<int> keep;
    for (int i = 0; i < t.n(); ++i)
        if (!(drop & bit(i))) {
            keep.push_back(i);
            out.ground.push_back(t.ground[i]);
        }
    for (const auto& [x, r] : t.central) {
        if (x & drop) continue;
        Mask nx = 0;
        for (size_t k = 0; k < keep.size(); ++k)
            if (x & bit(keep[k])) nx |= bit(int(k));
        out.central[nx] = r;
    }
    return out;
}

inline LocallyRankedTriple contraction(const LocallyRankedTriple& t, Mask x) {
    int rx = t.rk(x);  // throws when x is not central
    LocallyRankedTriple out;
    std::vector<int> keep;
    for (int i = 0; i < t.n(); ++i)
        if (!(x & bit(i)) && t.is_central(x | bit(i))) {
            keep.push_back(i);
            out.ground.push_back(t.ground[i]);
        }
    for (const auto& [y, r] : t.central) {
        if (y & x) continue;
        if (!t.is_central(y | x)) continue;
        Mask ny = 0;
        bool inside = true;
        for (int i = 0; i < t.n() && inside; ++i)
            if (y & bit(i)) {
                auto it = std::find(keep.begin(), keep.end(), i);
                if (it == keep.end()) inside = false;
                else ny |= bit(int(it - keep.begin()));
            }
        if (!inside) continue;  // cannot happen for simplicial families
        out.central[ny] = t.rk(y | x) - rx;
    }
    return out;
}

inline BivariatePoly tutte(const LocallyRankedTriple& t) {
    int r = t.triple_rank();
    BivariatePoly acc;
    for (const auto& [x, rx] : t.central)
        acc = acc + corank_nullity_term(r - rx, popcount(x) - rx);
    return acc;
}

inline bool is_independent(const LocallyRankedTriple& t, Mask x) {
    return t.is_central(x) && t.rk(x) == popcount(x);
}

// Inclusion-maximal independent central sets.
inline std::vector<Mask> bases(const LocallyRankedTriple& t) {
    std::vector<Mask> out;
    for (Mask x : t.central_sets()) {
        if (!is_independent(t, x)) continue;
        bool maximal = true;
        for (int i = 0; i < t.n() && maximal; ++i)
            if (!(x & bit(i)) && is_independent(t, x | bit(i))) maximal = false;
        if (maximal) out.push_back(x);
    }
    return out;
}

// A total order on the ground set, as positions: pos[i] is the priority of
// element i (smaller = earlier). The default order is the input order.
using GroundOrder = std::vector<int>;

inline GroundOrder default_order(const LocallyRankedTriple& t) {
    GroundOrder pos(t.n());
    for (int i = 0; i < t.n(); ++i) pos[i] = i;
    return pos;
}

inline int order_min(const GroundOrder& pos, Mask x) {
    int best = -1;
    for (int i = 0; i < int(pos.size()); ++i)
        if ((x & bit(i)) && (best < 0 || pos[i] < pos[best])) best = i;
    return best;
}

struct Activities {
    Mask internal = 0;
    Mask external = 0;
};

// Internally/externally active elements of a basis in the matroid style,
// restricted to central sets: dependent sets are central sets with
// rk < |X|, codependent sets are those whose deletion drops the rank.
inline Activities activities(const LocallyRankedTriple& t, Mask b, const GroundOrder& pos) {
    if (!is_independent(t, b)) throw std::invalid_argument("not a basis: " + t.set_str(b));
    {
        bool maximal = true;
        for (int i = 0; i < t.n(); ++i)
            if (!(b & bit(i)) && is_independent(t, b | bit(i))) maximal = false;
        if (!maximal) throw std::invalid_argument("not a basis: " + t.set_str(b));
    }
    int total_rank = t.triple_rank();
    Activities act;
    Mask all = t.n() == 32 ? ~Mask(0) : bit(t.n()) - 1;
    // externally active: e outside B, minimal in some dependent central subset of B+e
    for (int e = 0; e < t.n(); ++e) {
        if (b & bit(e)) continue;
        Mask pool = b;
        bool active = false;
        for (Mask d = pool;; d = (d - 1) & pool) {
            Mask cand = d | bit(e);
            if (t.is_central(cand) && t.rk(cand) < popcount(cand) && order_min(pos, cand) == e) {
                active = true;
                break;
            }
            if (d == 0) break;
        }
        if (active) act.external |= bit(e);
    }
    // internally active: b in B, minimal in some codependent subset of (S-B)+b
    for (int e = 0; e < t.n(); ++e) {
        if (!(b & bit(e))) continue;
        Mask pool = all & ~b;
        bool active = false;
        for (Mask d0 = pool;; d0 = (d0 - 1) & pool) {
            Mask cand = d0 | bit(e);
            if (order_min(pos, cand) == e) {
                // codependent: removing cand drops the rank of the triple
                int rr = 0;
                for (const auto& [y, ry] : t.central)
                    if (!(y & cand)) rr = std::max(rr, ry);
                if (rr < total_rank) {
                    active = true;
                    break;
                }
            }
            if (d0 == 0) break;
        }
        if (active) act.internal |= bit(e);
    }
    return act;
}

inline BivariatePoly basis_activity_tutte(const LocallyRankedTriple& t, const GroundOrder& pos) {
    BivariatePoly acc;
    for (Mask b : bases(t)) {
        Activities a = activities(t, b, pos);
        acc.add_term(popcount(a.internal), popcount(a.external), 1);
    }
    return acc;
}

struct Molecule {
    Mask r = 0, f = 0, t = 0;
};

// (R, F, T) disjoint with R+F+T central and rk(A) = rk(R) + |A & F| for
// every A between R and R+F+T.
inline bool is_molecule(const LocallyRankedTriple& t, Mask r, Mask f, Mask tt) {
    if ((r & f) || (r & tt) || (f & tt)) return false;
    Mask m = r | f | tt;
    if (!t.is_central(m)) return false;
    int base = t.rk(r);
    Mask var = f | tt;
    for (Mask s = var;; s = (s - 1) & var) {
        if (t.rk(r | s) != base + popcount(s & f)) return false;
        if (s == 0) break;
    }
    return true;
}

// Given R inside M central, the only possible molecule partition of M-R
// splits off F = rank-increasing elements; returns it when valid.
inline std::optional<Molecule> molecule_partition(const LocallyRankedTriple& t, Mask r, Mask m) {
    if ((r & ~m) != 0 || !t.is_central(m)) return std::nullopt;
    int base = t.rk(r);
    Mask f = 0, rest = m & ~r;
    for (int i = 0; i < t.n(); ++i)
        if (rest & bit(i)) {
            int d = t.rk(r | bit(i)) - base;
            if (d == 1) f |= bit(i);
            else if (d != 0) return std::nullopt;
        }
    Mask tt = rest & ~f;
    if (!is_molecule(t, r, f, tt)) return std::nullopt;
    return Molecule{r, f, tt};
}

inline std::vector<Molecule> molecules(const LocallyRankedTriple& t) {
    std::vector<Molecule> out;
    for (Mask m : t.central_sets()) {
        for (Mask r = m;; r = (r - 1) & m) {
            auto mol = molecule_partition(t, r, m);
            if (mol) out.push_back(*mol);
            if (r == 0) break;
        }
    }
    return out;
}

// Every central set lies in exactly one interval [R_B, B + E(B)].
inline bool crapo_partition_check(const LocallyRankedTriple& t, const GroundOrder& pos) {
    std::unordered_map<Mask, int> hits;
    for (Mask x : t.central_sets()) hits[x] = 0;
    for (Mask b : bases(t)) {
        Activities a = activities(t, b, pos);
        Mask lo = b & ~a.internal;
        Mask upper = (b | a.external) & ~lo;
        for (Mask s = upper;; s = (s - 1) & upper) {
            Mask x = lo | s;
            auto it = hits.find(x);
            if (it == hits.end()) return false;  // interval escapes the family
            it->second += 1;
            if (s == 0) break;
        }
    }
    for (const auto& [x, c] : hits)
        if (c != 1) return false;
    return true;
}

}  // namespace arimat
