#pragma once

// Finitely generated abelian groups as (free rank, invariant factors),
// presentations (ambient rank + relation matrix), homomorphisms given on
// ambient generators, kernels, and pushouts.

#include "int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace arimat {

struct FgAbGroup {
    int free_rank = 0;
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., each >= 2

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_cyclic() const { return free_rank + int(invariant_factors.size()) <= 1; }
    bool is_finite() const { return free_rank == 0; }
    Int torsion_order() const {
        Int t = 1;
        for (const auto& d : invariant_factors) t *= d;
        return t;
    }
    std::optional<Int> order() const {
        if (free_rank > 0) return std::nullopt;
        return torsion_order();
    }
    bool operator==(const FgAbGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    std::string str() const {
        if (is_trivial()) return "0";
        std::ostringstream s;
        bool first = true;
        if (free_rank == 1) { s << "Z"; first = false; }
        else if (free_rank > 1) { s << "Z^" << free_rank; first = false; }
        for (const auto& d : invariant_factors) {
            if (!first) s << " + ";
            s << "Z/" << d.get_str();
            first = false;
        }
        return s.str();
    }
};

inline FgAbGroup make_fg_ab_group(int free_rank, std::vector<Int> factors) {
    FgAbGroup g;
    g.free_rank = free_rank;
    for (auto& d : factors) {
        if (d < 0) d = -d;
        if (d == 0) { ++g.free_rank; continue; }
        if (d == 1) continue;
        g.invariant_factors.push_back(d);
    }
    std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
    for (size_t i = 0; i + 1 < g.invariant_factors.size(); ++i)
        if (g.invariant_factors[i + 1] % g.invariant_factors[i] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    return g;
}

// Z^ambient / (column lattice of relations).
inline FgAbGroup cokernel_group(int ambient, const IntMatrix& relations) {
    if (relations.rows() != ambient) throw std::invalid_argument("relation rows != ambient rank");
    SnfResult s = snf(relations);
    std::vector<Int> d = s.diagonal();
    int r = 0;
    std::vector<Int> factors;
    for (const auto& x : d)
        if (x != 0) { ++r; factors.push_back(x); }
    return make_fg_ab_group(ambient - r, std::move(factors));
}

struct Presentation {
    int ambient = 0;
    IntMatrix relations;  // ambient x m, columns are relators

    FgAbGroup invariants() const { return cokernel_group(ambient, relations); }
    bool operator==(const Presentation& o) const {
        return ambient == o.ambient && relations == o.relations;
    }
};

inline Presentation make_presentation(int ambient, IntMatrix relations) {
    if (relations.rows() != ambient) throw std::invalid_argument("relation rows != ambient rank");
    return Presentation{ambient, std::move(relations)};
}

// Canonical diagonal presentation Z^free + Z/d_1 + ... + Z/d_k,
// generators ordered free part first.
inline Presentation presentation_of(const FgAbGroup& g) {
    int n = g.free_rank + int(g.invariant_factors.size());
    IntMatrix rel(n, int(g.invariant_factors.size()));
    for (int j = 0; j < int(g.invariant_factors.size()); ++j)
        rel(g.free_rank + j, j) = g.invariant_factors[j];
    return Presentation{n, rel};
}

namespace detail {
struct LatticeBasis {
    IntMatrix gens;
    std::vector<int> pivot_rows;
};
inline LatticeBasis column_basis(const IntMatrix& m) {
    HnfResult r = hnf(m);
    std::vector<int> keep(r.rank());
    for (int j = 0; j < r.rank(); ++j) keep[j] = j;
    return {r.h.select_cols(keep), r.pivot_rows};
}
inline bool in_column_lattice(const LatticeBasis& b, std::vector<Int> v) {
    return solve_in_basis(b.gens, b.pivot_rows, std::move(v)).has_value();
}
}  // namespace detail

struct GroupMap {
    Presentation source;
    Presentation target;
    IntMatrix matrix;  // target.ambient x source.ambient, images of generators
};

inline bool map_is_well_defined(const GroupMap& f) {
    if (f.matrix.rows() != f.target.ambient || f.matrix.cols() != f.source.ambient) return false;
    detail::LatticeBasis tgt = detail::column_basis(f.target.relations);
    IntMatrix carried = f.matrix * f.source.relations;
    for (int j = 0; j < carried.cols(); ++j)
        if (!detail::in_column_lattice(tgt, carried.col(j))) return false;
    return true;
}

inline GroupMap make_group_map(Presentation source, Presentation target, IntMatrix matrix) {
    GroupMap f{std::move(source), std::move(target), std::move(matrix)};
    if (!map_is_well_defined(f))
        throw std::invalid_argument("matrix does not carry source relations into target relations");
    return f;
}

// Two maps with equal source/target agree as homomorphisms of the
// presented groups iff their matrices differ by target relations.
inline bool maps_equal(const GroupMap& f, const GroupMap& g) {
    if (!(f.source.ambient == g.source.ambient && f.target.ambient == g.target.ambient)) return false;
    detail::LatticeBasis tgt = detail::column_basis(f.target.relations);
    for (int j = 0; j < f.matrix.cols(); ++j) {
        std::vector<Int> diff(f.matrix.rows());
        for (int i = 0; i < f.matrix.rows(); ++i) diff[i] = f.matrix(i, j) - g.matrix(i, j);
        if (!detail::in_column_lattice(tgt, std::move(diff))) return false;
    }
    return true;
}

inline GroupMap compose(const GroupMap& g, const GroupMap& f) {
    return GroupMap{f.source, g.target, g.matrix * f.matrix};
}

inline bool map_is_surjective(const GroupMap& f) {
    // image = (f(Z^ns) + relations) must be all of Z^nt mod relations
    IntMatrix combined(f.target.ambient, f.matrix.cols() + f.target.relations.cols());
    for (int j = 0; j < f.matrix.cols(); ++j)
        for (int i = 0; i < f.target.ambient; ++i) combined(i, j) = f.matrix(i, j);
    for (int j = 0; j < f.target.relations.cols(); ++j)
        for (int i = 0; i < f.target.ambient; ++i)
            combined(i, f.matrix.cols() + j) = f.target.relations(i, j);
    return cokernel_group(f.target.ambient, combined).is_trivial();
}

// Kernel of the induced map as an abstract group.
inline FgAbGroup map_kernel(const GroupMap& f) {
    // K = {x in Z^ns : f(x) in target relation lattice}: project the integer
    // kernel of [matrix | -target relations] to the x block, then quotient
    // by the source relations.
    int ns = f.source.ambient, mt = f.target.relations.cols();
    IntMatrix block(f.target.ambient, ns + mt);
    for (int j = 0; j < ns; ++j)
        for (int i = 0; i < f.target.ambient; ++i) block(i, j) = f.matrix(i, j);
    for (int j = 0; j < mt; ++j)
        for (int i = 0; i < f.target.ambient; ++i) block(i, ns + j) = -f.target.relations(i, j);
    IntMatrix ker = kernel(block);
    std::vector<int> xrows(ns);
    for (int i = 0; i < ns; ++i) xrows[i] = i;
    IntMatrix kx = ker.select_rows(xrows);  // generators of K inside Z^ns
    detail::LatticeBasis kb = detail::column_basis(kx);
    // express source relations in the K basis (they lie in K)
    IntMatrix y(kb.gens.cols(), f.source.relations.cols());
    for (int j = 0; j < f.source.relations.cols(); ++j) {
        auto sol = solve_in_basis(kb.gens, kb.pivot_rows, f.source.relations.col(j));
        if (!sol) throw std::logic_error("source relations escape the kernel lattice");
        for (int i = 0; i < kb.gens.cols(); ++i) y(i, j) = (*sol)[i];
    }
    return cokernel_group(kb.gens.cols(), y);
}

inline bool kernel_is_cyclic(const GroupMap& f) { return map_kernel(f).is_cyclic(); }

inline bool map_is_isomorphism(const GroupMap& f) {
    return map_is_surjective(f) && map_kernel(f).is_trivial();
}

// Pushout of f: A -> B and g: A -> C, i.e. (B + C) / <(f(a), -g(a))>.
struct PushoutResult {
    Presentation object;
    GroupMap from_b;
    GroupMap from_c;
};

inline PushoutResult pushout(const GroupMap& f, const GroupMap& g) {
    if (!(f.source == g.source)) throw std::invalid_argument("pushout maps must share their source");
    int nb = f.target.ambient, nc = g.target.ambient, na = f.source.ambient;
    int mb = f.target.relations.cols(), mc = g.target.relations.cols();
    IntMatrix rel(nb + nc, mb + mc + na);
    for (int j = 0; j < mb; ++j)
        for (int i = 0; i < nb; ++i) rel(i, j) = f.target.relations(i, j);
    for (int j = 0; j < mc; ++j)
        for (int i = 0; i < nc; ++i) rel(nb + i, mb + j) = g.target.relations(i, j);
    for (int j = 0; j < na; ++j) {
        for (int i = 0; i < nb; ++i) rel(i, mb + mc + j) = f.matrix(i, j);
        for (int i = 0; i < nc; ++i) rel(nb + i, mb + mc + j) = -g.matrix(i, j);
    }
    Presentation d{nb + nc, std::move(rel)};
    IntMatrix inb(nb + nc, nb), inc(nb + nc, nc);
    for (int i = 0; i < nb; ++i) inb(i, i) = 1;
    for (int i = 0; i < nc; ++i) inc(nb + i, i) = 1;
    return PushoutResult{d, GroupMap{f.target, d, std::move(inb)}, GroupMap{g.target, d, std::move(inc)}};
}

}  // namespace arimat
