#pragma once

// The correspondence between simple semimatroids and geometric
// semilattices: flats poset in one direction, the atom complex in the
// other, with explicitly verified round-trip isomorphisms.

#include "poset.hpp"
#include "semimatroid.hpp"

namespace arimat {

inline FinitePoset flats_to_semilattice(const LocallyRankedTriple& t) { return flats_poset(t); }

// Ground set: atoms of P; central sets: atom subsets whose join exists;
// rank: the rank of the join. P must be a geometric semilattice.
inline LocallyRankedTriple semilattice_to_semimatroid(const FinitePoset& p) {
    PosetReport rep = check_geometric_semilattice(p);
    if (!rep.ok())
        throw std::invalid_argument("not a geometric semilattice:\n" + rep.summary());
    std::vector<int> at = p.atoms();
    if (int(at.size()) > max_ground())
        throw std::invalid_argument("too many atoms for subset enumeration");
    LocallyRankedTriple t;
    for (int a : at) t.ground.push_back(p.node(a).id);
    for (Mask x = 0; x < bit(int(at.size())); ++x) {
        std::vector<int> sel;
        for (int i = 0; i < int(at.size()); ++i)
            if (x & bit(i)) sel.push_back(at[i]);
        auto j = p.join_all(sel);
        if (j) t.central[x] = p.node(*j).rank;
    }
    return t;
}

inline bool is_simple(const LocallyRankedTriple& t) {
    for (int i = 0; i < t.n(); ++i)
        if (t.rk(bit(i)) != 1) return false;
    for (const auto& [x, r] : t.central)
        if (popcount(x) == 2 && r != 2) return false;
    return true;
}

struct RoundTripResult {
    bool ok = false;
    std::string detail;
};

// Simple semimatroid -> flats poset -> atom semimatroid; the isomorphism
// sends x to the atom {x} and is checked on every subset.
inline RoundTripResult roundtrip_semimatroid(const LocallyRankedTriple& t) {
    RoundTripResult res;
    if (!check_locally_ranked(t).ok() || !check_semimatroid(t).ok()) {
        res.detail = "input is not a semimatroid";
        return res;
    }
    if (!is_simple(t)) {
        res.detail = "input is not simple";
        return res;
    }
    FinitePoset l = flats_to_semilattice(t);
    LocallyRankedTriple t2 = semilattice_to_semimatroid(l);
    if (t2.n() != t.n()) {
        res.detail = "atom count differs from the ground set";
        return res;
    }
    // x maps to the atom whose flat is the closure of {x}
    std::vector<int> image(t.n(), -1);
    std::vector<bool> hit(t.n(), false);
    for (int i = 0; i < t.n(); ++i) {
        Mask fl = closure(t, bit(i));
        int target = -1;
        for (int j = 0; j < t2.n(); ++j)
            if (t2.ground[j] == t.set_str(fl)) target = j;
        if (target < 0 || hit[target]) {
            res.detail = "ground map is not a bijection onto the atoms";
            return res;
        }
        image[i] = target;
        hit[target] = true;
    }
    for (Mask x = 0; x < bit(t.n()); ++x) {
        Mask y = 0;
        for (int i = 0; i < t.n(); ++i)
            if (x & bit(i)) y |= bit(image[i]);
        bool cx = t.is_central(x), cy = t2.is_central(y);
        if (cx != cy) {
            res.detail = "central families disagree at " + t.set_str(x);
            return res;
        }
        if (cx && t.rk(x) != t2.rk(y)) {
            res.detail = "ranks disagree at " + t.set_str(x);
            return res;
        }
    }
    res.ok = true;
    return res;
}

// Geometric semilattice -> atom semimatroid -> flats poset; the
// isomorphism sends x to the set of atoms below x and is checked in both
// directions.
inline RoundTripResult roundtrip_semilattice(const FinitePoset& p) {
    RoundTripResult res;
    PosetReport rep = check_geometric_semilattice(p);
    if (!rep.ok()) {
        res.detail = "input is not a geometric semilattice: " + rep.summary();
        return res;
    }
    LocallyRankedTriple t = semilattice_to_semimatroid(p);
    FinitePoset l2 = flats_poset(t);
    if (l2.size() != p.size()) {
        res.detail = "flat count differs from the poset size";
        return res;
    }
    std::vector<int> at = p.atoms();
    std::vector<int> image(p.size(), -1);
    std::vector<bool> hit(p.size(), false);
    for (int x = 0; x < p.size(); ++x) {
        Mask below = 0;
        for (int i = 0; i < int(at.size()); ++i)
            if (p.leq(at[i], x)) below |= bit(i);
        int target = l2.index_of(t.set_str(below));
        if (target < 0 || hit[target]) {
            res.detail = "atom-set map is not a bijection onto the flats at " + p.node(x).id;
            return res;
        }
        image[x] = target;
        hit[target] = true;
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y) != l2.leq(image[x], image[y])) {
                res.detail = "order disagrees between " + p.node(x).id + " and " + p.node(y).id;
                return res;
            }
    res.ok = true;
    return res;
}

inline bool cryptomorphism_roundtrip(const LocallyRankedTriple& t) {
    return roundtrip_semimatroid(t).ok;
}

inline bool cryptomorphism_roundtrip(const FinitePoset& p) { return roundtrip_semilattice(p).ok; }

}  // namespace arimat
