#pragma once

// Sublattices of Z^n given by generator columns, with optional affine
// offset. Canonical form: column HNF of the generators with zero columns
// dropped, offset reduced to the unique representative whose pivot-row
// coordinates lie in [0, pivot).

#include "int_matrix.hpp"
#include "abelian.hpp"

#include <optional>

namespace arimat {

struct SubLattice {
    int ambient = 0;
    IntMatrix gens;              // ambient x rank, canonical column HNF
    std::vector<int> pivot_rows; // pivot row per generator column
    std::vector<Int> offset;     // size ambient, canonically reduced

    int rank() const { return gens.cols(); }
    bool is_centered() const {
        for (const auto& x : offset) if (x != 0) return false;
        return true;
    }
    bool operator==(const SubLattice& o) const {
        return ambient == o.ambient && gens == o.gens && offset == o.offset;
    }
};

// Reduce v modulo the (canonical-form) generator columns: subtract
// multiples of each generator so the pivot-row coordinates land in
// [0, pivot). The result is the unique such coset representative.
inline std::vector<Int> reduce_mod(const IntMatrix& gens, const std::vector<int>& pivot_rows,
                                   std::vector<Int> v) {
    for (int j = 0; j < gens.cols(); ++j) {
        int p = pivot_rows[j];
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), gens(p, j).get_mpz_t());
        if (q != 0)
            for (int i = 0; i < gens.rows(); ++i) v[i] -= q * gens(i, j);
    }
    return v;
}

inline SubLattice make_lattice(int ambient, const IntMatrix& generators,
                               std::vector<Int> offset = {}) {
    if (generators.rows() != ambient) throw std::invalid_argument("generator row count != ambient dim");
    if (offset.empty()) offset.assign(ambient, 0);
    if (int(offset.size()) != ambient) throw std::invalid_argument("offset length != ambient dim");
    HnfResult r = hnf(generators);
    std::vector<int> keep(r.rank());
    for (int j = 0; j < r.rank(); ++j) keep[j] = j;
    SubLattice l;
    l.ambient = ambient;
    l.gens = r.h.select_cols(keep);
    l.pivot_rows = r.pivot_rows;
    l.offset = reduce_mod(l.gens, l.pivot_rows, std::move(offset));
    return l;
}

inline SubLattice zero_lattice(int ambient) { return make_lattice(ambient, IntMatrix(ambient, 0)); }

inline SubLattice full_lattice(int ambient) { return make_lattice(ambient, IntMatrix::identity(ambient)); }

inline bool lattice_member(const SubLattice& l, const std::vector<Int>& v) {
    if (int(v.size()) != l.ambient) throw std::invalid_argument("vector length != ambient dim");
    std::vector<Int> w(v);
    for (int i = 0; i < l.ambient; ++i) w[i] -= l.offset[i];
    return solve_in_basis(l.gens, l.pivot_rows, std::move(w)).has_value();
}

// Pure closure span_Q(L) ∩ Z^n, computed by a double orthogonal complement.
inline SubLattice saturate(const SubLattice& l) {
    if (!l.is_centered()) throw std::invalid_argument("saturate requires zero offset");
    IntMatrix perp = kernel(l.gens.transpose());      // {x : x ⟂ L}
    return make_lattice(l.ambient, kernel(perp.transpose()));
}

// Z^ambient / L as an abstract group.
inline FgAbGroup quotient(int ambient_dim, const SubLattice& l) {
    if (!l.is_centered()) throw std::invalid_argument("quotient requires zero offset");
    if (l.ambient != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    return cokernel_group(ambient_dim, l.gens);
}

// [L_big : L_small], or nullopt for infinite index.
// Throws if L_small is not contained in L_big.
inline std::optional<Int> lattice_index(const SubLattice& big, const SubLattice& small) {
    if (!big.is_centered() || !small.is_centered())
        throw std::invalid_argument("lattice_index requires zero offsets");
    if (big.ambient != small.ambient) throw std::invalid_argument("ambient dimension mismatch");
    IntMatrix y(big.rank(), small.rank());
    for (int j = 0; j < small.rank(); ++j) {
        auto sol = solve_in_basis(big.gens, big.pivot_rows, small.gens.col(j));
        if (!sol) throw std::invalid_argument("not a sublattice");
        for (int i = 0; i < big.rank(); ++i) y(i, j) = (*sol)[i];
    }
    HnfResult r = hnf(y);
    if (r.rank() < big.rank()) return std::nullopt;
    Int idx = 1;
    for (int j = 0; j < r.rank(); ++j) idx *= r.h(r.pivot_rows[j], j);
    return idx;
}

// The finite quotient L_big / L_small (pre: finite index).
inline FgAbGroup lattice_quotient_group(const SubLattice& big, const SubLattice& small) {
    IntMatrix y(big.rank(), small.rank());
    for (int j = 0; j < small.rank(); ++j) {
        auto sol = solve_in_basis(big.gens, big.pivot_rows, small.gens.col(j));
        if (!sol) throw std::invalid_argument("not a sublattice");
        for (int i = 0; i < big.rank(); ++i) y(i, j) = (*sol)[i];
    }
    return cokernel_group(big.rank(), y);
}

// Coset representatives of L_big / L_small, in big-basis coordinates
// mapped back to ambient coordinates (pre: finite index).
inline std::vector<std::vector<Int>> coset_representatives(const SubLattice& big,
                                                           const SubLattice& small) {
    IntMatrix y(big.rank(), small.rank());
    for (int j = 0; j < small.rank(); ++j) {
        auto sol = solve_in_basis(big.gens, big.pivot_rows, small.gens.col(j));
        if (!sol) throw std::invalid_argument("not a sublattice");
        for (int i = 0; i < big.rank(); ++i) y(i, j) = (*sol)[i];
    }
    HnfResult r = hnf(y);
    if (r.rank() < big.rank()) throw std::invalid_argument("infinite index");
    // square staircase: pivot j sits in row j, reps are boxes [0, pivot)
    std::vector<std::vector<Int>> reps;
    std::vector<Int> cur(big.rank(), 0);
    std::vector<long> bound(big.rank());
    for (int j = 0; j < big.rank(); ++j) {
        if (!r.h(r.pivot_rows[j], j).fits_slong_p())
            throw std::invalid_argument("coset enumeration too large");
        bound[j] = r.h(r.pivot_rows[j], j).get_si();
    }
    std::vector<long> t(big.rank(), 0);
    while (true) {
        std::vector<Int> amb(big.ambient, 0);
        for (int j = 0; j < big.rank(); ++j)
            for (int i = 0; i < big.ambient; ++i) amb[i] += Int(t[j]) * big.gens(i, j);
        reps.push_back(std::move(amb));
        int j = 0;
        while (j < big.rank() && ++t[j] == bound[j]) t[j++] = 0;
        if (j == big.rank()) break;
    }
    return reps;
}

}  // namespace arimat
