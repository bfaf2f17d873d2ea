#pragma once

// Periodic arrangements of integer hyperplanes acted on by translations:
// for a d x n integer matrix A (columns a_i) and rational offsets alpha_i,
// the orbit lattices W(X) and I(X), multiplicities, the induced quotient
// data on [n], the poset of layers of the associated toric arrangement,
// and the eta statistic.

#include "lattice.hpp"
#include "quotient.hpp"

#include <map>
#include <optional>

namespace arimat {

struct PeriodicArrangement {
    int d = 0;
    IntMatrix a;                // d x n, columns are the defining vectors
    std::vector<Rat> offsets;   // length n, all zero when centered

    int n() const { return a.cols(); }
    bool centered() const {
        for (const auto& q : offsets)
            if (q != 0) return false;
        return true;
    }
    std::vector<int> elements(Mask x) const {
        std::vector<int> out;
        for (int i = 0; i < n(); ++i)
            if (x & bit(i)) out.push_back(i);
        return out;
    }
    IntMatrix restricted(Mask x) const { return a.select_cols(elements(x)); }
};

inline PeriodicArrangement make_arrangement(int d, IntMatrix a, std::vector<Rat> offsets = {}) {
    if (a.rows() != d) throw std::invalid_argument("column length differs from the ambient dimension");
    if (a.cols() > max_ground()) throw std::invalid_argument("too many columns for subset enumeration");
    if (offsets.empty()) offsets.assign(a.cols(), Rat(0));
    if (int(offsets.size()) != a.cols()) throw std::invalid_argument("offset count differs from column count");
    for (int j = 0; j < a.cols(); ++j) {
        bool zero = true;
        for (int i = 0; i < d; ++i)
            if (a(i, j) != 0) zero = false;
        if (zero && offsets[j].get_den() != 1)
            throw std::invalid_argument("zero column with non-integral offset defines no hyperplane orbit");
    }
    return PeriodicArrangement{d, std::move(a), std::move(offsets)};
}

// I(X): the image of the translation lattice inside Z^X.
inline SubLattice i_lattice(const PeriodicArrangement& arr, Mask x) {
    IntMatrix ax = arr.restricted(x);
    return make_lattice(popcount(x), ax.transpose());
}

// W(X): the set of translation tuples with a nonempty intersection. In
// the centered case this is the pure closure of I(X); with offsets it is
// an affine coset of that lattice, or empty.
inline std::optional<SubLattice> w_lattice(const PeriodicArrangement& arr, Mask x) {
    IntMatrix ax = arr.restricted(x);
    int nx = ax.cols();
    IntMatrix u = kernel(ax);                 // {u : A[X] u = 0}
    IntMatrix directions = kernel(u.transpose());  // {k : u^T k = 0 for all u}
    if (arr.centered()) return make_lattice(nx, directions);
    // solve u^T k = -u^T alpha over the integers
    std::vector<Rat> c(u.cols(), Rat(0));
    auto idx = arr.elements(x);
    for (int j = 0; j < u.cols(); ++j) {
        Rat acc(0);
        for (int i = 0; i < nx; ++i) acc += Rat(u(i, j)) * arr.offsets[idx[i]];
        c[j] = -acc;
    }
    std::vector<Int> ci(u.cols());
    for (int j = 0; j < u.cols(); ++j) {
        if (c[j].get_den() != 1) return std::nullopt;  // no integral tuple at all
        ci[j] = c[j].get_num();
    }
    SubLattice span = make_lattice(u.cols(), u.transpose());
    auto part = solve_in_basis(span.gens, span.pivot_rows, ci);
    if (!part) {
        // c is orthogonal-space-consistent only when it lies in the image
        // of u^T; otherwise W(X) is empty
        return std::nullopt;
    }
    // pull a particular solution back through the HNF transform
    HnfResult h = hnf(u.transpose());
    std::vector<Int> w(h.u.cols(), 0);
    for (int j = 0; j < int(part->size()); ++j) w[j] = (*part)[j];
    std::vector<Int> k0 = h.u * w;
    return make_lattice(nx, directions, std::move(k0));
}

// |W(X)/I(X)| in the centered case; with offsets, the index of I(X) in
// the direction lattice of W(X), and 0 when W(X) is empty.
inline Int multiplicity(const PeriodicArrangement& arr, Mask x) {
    auto w = w_lattice(arr, x);
    if (!w) return 0;
    SubLattice w0 = make_lattice(w->ambient, w->gens);
    auto idx = lattice_index(w0, i_lattice(arr, x));
    if (!idx) throw std::logic_error("image lattice has unexpected corank");
    return *idx;
}

// Quotient data over [n]: central sets are those with nonempty W(X).
inline QuotientData quotient_data(const PeriodicArrangement& arr) {
    QuotientData d;
    for (int i = 0; i < arr.n(); ++i) d.triple.ground.push_back(std::to_string(i + 1));
    for (Mask x = 0; x < bit(arr.n()); ++x) {
        Int m = multiplicity(arr, x);
        if (m == 0) continue;
        d.triple.central[x] = rank(arr.restricted(x));
        d.mult[x] = m;
    }
    return d;
}

inline QuotientData arithmetic_matroid(const PeriodicArrangement& arr) {
    if (!arr.centered()) throw std::invalid_argument("arithmetic matroid extraction requires a centered arrangement");
    return quotient_data(arr);
}

struct Layer {
    Mask support = 0;           // the closed support F
    std::vector<Int> coset;     // canonical representative inside Z^F
    int rank = 0;

    std::string id(const PeriodicArrangement& arr) const {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < arr.n(); ++i)
            if (support & bit(i)) {
                if (!first) s += ",";
                s += std::to_string(i + 1);
                first = false;
            }
        s += "}|(";
        for (size_t i = 0; i < coset.size(); ++i) s += (i ? "," : "") + coset[i].get_str();
        s += ")|" + std::to_string(rank);
        return s;
    }
    bool operator<(const Layer& o) const {
        if (support != o.support) return support < o.support;
        return coset < o.coset;
    }
    bool operator==(const Layer& o) const { return support == o.support && coset == o.coset; }
};

// The layer through H(X, k): solve for a rational point, collect every
// orbit class whose hyperplanes contain the whole flat, and canonicalize
// the resulting translation tuple modulo I(support).
inline Layer layer_closure(const PeriodicArrangement& arr, Mask x, const std::vector<Int>& k) {
    auto w = w_lattice(arr, x);
    if (!w || !lattice_member(*w, k)) throw std::invalid_argument("tuple is not in W(X)");
    IntMatrix ax = arr.restricted(x);
    auto idx = arr.elements(x);
    std::vector<Rat> rhs(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) rhs[i] = Rat(k[i]) + arr.offsets[idx[i]];
    auto point = solve_rational(ax.transpose(), rhs);
    if (!point) throw std::logic_error("W(X) member without a rational point");
    int rx = rank(ax);
    Layer layer;
    layer.rank = rx;
    std::vector<Int> values;
    for (int e = 0; e < arr.n(); ++e) {
        // a_e constant on the flat iff it lies in the column span of A[X]
        std::vector<int> with = idx;
        with.push_back(e);
        std::sort(with.begin(), with.end());
        with.erase(std::unique(with.begin(), with.end()), with.end());
        if (rank(arr.a.select_cols(with)) != rx) continue;
        Rat val(0);
        for (int i = 0; i < arr.d; ++i) val += Rat(arr.a(i, e)) * (*point)[i];
        val -= arr.offsets[e];
        if (val.get_den() != 1) continue;
        layer.support |= bit(e);
        values.push_back(val.get_num());
    }
    SubLattice i_f = i_lattice(arr, layer.support);
    layer.coset = reduce_mod(i_f.gens, i_f.pivot_rows, values);
    return layer;
}

struct LayerPoset {
    FinitePoset poset;
    std::vector<Layer> layers;  // aligned with poset nodes
};

// All layers, deduplicated by (closed support, canonical coset), ordered
// by reverse inclusion of the corresponding flats.
inline LayerPoset layer_poset(const PeriodicArrangement& arr) {
    std::map<Layer, int> seen;
    std::vector<Layer> layers;
    for (Mask x = 0; x < bit(arr.n()); ++x) {
        auto w = w_lattice(arr, x);
        if (!w) continue;
        SubLattice w0 = make_lattice(w->ambient, w->gens);
        for (const auto& rep : coset_representatives(w0, i_lattice(arr, x))) {
            std::vector<Int> k(rep.size());
            for (size_t i = 0; i < rep.size(); ++i) k[i] = rep[i] + w->offset[i];
            Layer layer = layer_closure(arr, x, k);
            if (seen.emplace(layer, int(layers.size())).second) layers.push_back(layer);
        }
    }
    int m = int(layers.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if ((layers[i].support & ~layers[j].support) != 0) continue;
            // restrict j's tuple to i's support and compare modulo I(F)
            std::vector<Int> rest;
            auto sup_j = arr.elements(layers[j].support);
            for (size_t p = 0; p < sup_j.size(); ++p)
                if (layers[i].support & bit(sup_j[p])) rest.push_back(layers[j].coset[p]);
            SubLattice i_f = i_lattice(arr, layers[i].support);
            std::vector<Int> diff(rest.size());
            for (size_t p = 0; p < rest.size(); ++p) diff[p] = rest[p] - layers[i].coset[p];
            if (lattice_member(i_f, diff)) leq[i][j] = true;
        }
    std::vector<FinitePoset::Node> nodes;
    for (const Layer& l : layers) nodes.push_back({l.id(arr), l.rank});
    return LayerPoset{FinitePoset::from_leq(std::move(nodes), leq), std::move(layers)};
}

// Number of orbit classes in T whose subtorus contains the given layer.
inline int eta(const PeriodicArrangement& arr, Mask t, const Layer& layer) {
    return popcount(t & layer.support);
}

// For a molecule (R, {}, T): the rho generating polynomial over subsets
// of T equals the eta generating polynomial over the layers above R.
inline bool check_eta_identity(const PeriodicArrangement& arr, Mask r, Mask t) {
    QuotientData d = quotient_data(arr);
    if (!is_molecule(d.triple, r, 0, t)) throw std::invalid_argument("(R, {}, T) is not a molecule");
    UniPoly lhs;
    for (Mask l = t;; l = (l - 1) & t) {
        lhs.add_term(popcount(l), rho(d, r | l, r | t));
        if (l == 0) break;
    }
    UniPoly rhs;
    auto w = w_lattice(arr, r);
    if (!w) return lhs.c.empty();
    SubLattice w0 = make_lattice(w->ambient, w->gens);
    for (const auto& rep : coset_representatives(w0, i_lattice(arr, r))) {
        std::vector<Int> k(rep.size());
        for (size_t i = 0; i < rep.size(); ++i) k[i] = rep[i] + w->offset[i];
        Layer layer = layer_closure(arr, r, k);
        rhs.add_term(eta(arr, t, layer), 1);
    }
    return lhs == rhs;
}

// chi of the layer poset equals (-1)^r T(1-t, 0).
inline bool check_theorem_cp(const PeriodicArrangement& arr) {
    for (int j = 0; j < arr.n(); ++j) {
        bool zero = true;
        for (int i = 0; i < arr.d; ++i)
            if (arr.a(i, j) != 0) zero = false;
        if (zero) throw std::invalid_argument("loopless arrangement required");
    }
    int r = rank(arr.a);
    UniPoly chi = char_poly(layer_poset(arr).poset, r);
    UniPoly one_minus_t = UniPoly::constant(1) - UniPoly::variable();
    UniPoly rhs = g_tutte(quotient_data(arr)).substitute(one_minus_t, UniPoly{});
    if (r % 2 != 0) rhs = Int(-1) * rhs;
    return chi == rhs;
}

}  // namespace arimat
