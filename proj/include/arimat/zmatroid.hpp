#pragma once

// Matroids over the integers: subset-indexed abelian groups whose
// single-element squares are pushouts of surjections with cyclic kernel.
// Includes the realizable construction from an integer matrix, the square
// verifier, completion search for partially specified squares, and the
// extraction of the underlying rank/multiplicity data.

#include "periodic.hpp"

#include <map>

namespace arimat {

struct ZMatroid {
    int n = 0;
    std::map<Mask, Presentation> modules;
    std::map<std::pair<Mask, int>, GroupMap> maps;  // (A, e not in A) -> M(A) -> M(A+e)

    const Presentation& module_of(Mask a) const { return modules.at(a); }
    const GroupMap& step(Mask a, int e) const { return maps.at({a, e}); }
};

// Realizable construction: the module of I is Z^{I^c} modulo the rows of
// A restricted to I^c; the step maps are coordinate projections.
inline ZMatroid from_matrix(const IntMatrix& a) {
    int n = a.cols();
    if (n > max_ground()) throw std::invalid_argument("too many columns for subset enumeration");
    ZMatroid z;
    z.n = n;
    for (Mask i = 0; i < bit(n); ++i) {
        std::vector<int> comp;
        for (int e = 0; e < n; ++e)
            if (!(i & bit(e))) comp.push_back(e);
        IntMatrix rel = a.select_cols(comp).transpose();  // |I^c| x d
        z.modules.emplace(i, make_presentation(int(comp.size()), rel));
    }
    for (Mask i = 0; i < bit(n); ++i) {
        std::vector<int> comp;
        for (int e = 0; e < n; ++e)
            if (!(i & bit(e))) comp.push_back(e);
        for (int e : comp) {
            std::vector<int> keep;
            for (int f : comp)
                if (f != e) keep.push_back(f);
            IntMatrix proj(int(keep.size()), int(comp.size()));
            for (size_t r = 0; r < keep.size(); ++r)
                for (size_t c = 0; c < comp.size(); ++c)
                    if (keep[r] == comp[c]) proj(int(r), int(c)) = 1;
            z.maps.emplace(std::make_pair(i, e),
                           make_group_map(z.modules.at(i), z.modules.at(i | bit(e)), proj));
        }
    }
    return z;
}

struct ZMatroidReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {
inline std::string subset_str(Mask a, int n) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (a & bit(i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

// The square on (A, e1, e2) commutes and is a pushout whose corner is
// reached by an isomorphism.
inline bool square_is_pushout(const GroupMap& f1, const GroupMap& f2, const GroupMap& g1,
                              const GroupMap& g2, std::string* why = nullptr) {
    if (!maps_equal(compose(g1, f1), compose(g2, f2))) {
        if (why) *why = "square does not commute";
        return false;
    }
    PushoutResult p = pushout(f1, f2);
    IntMatrix induced(g1.target.ambient, p.object.ambient);
    for (int j = 0; j < g1.matrix.cols(); ++j)
        for (int i = 0; i < induced.rows(); ++i) induced(i, j) = g1.matrix(i, j);
    for (int j = 0; j < g2.matrix.cols(); ++j)
        for (int i = 0; i < induced.rows(); ++i) induced(i, g1.matrix.cols() + j) = g2.matrix(i, j);
    GroupMap u{p.object, g1.target, induced};
    if (!map_is_well_defined(u)) {
        if (why) *why = "mediating map is not well defined";
        return false;
    }
    if (!map_is_isomorphism(u)) {
        if (why) *why = "mediating map is not an isomorphism";
        return false;
    }
    return true;
}
}  // namespace detail

inline ZMatroidReport check_zmatroid(const ZMatroid& z) {
    ZMatroidReport rep;
    for (const auto& [key, f] : z.maps) {
        auto [a, e] = key;
        std::string where = detail::subset_str(a, z.n) + " + " + std::to_string(e + 1);
        if (!map_is_surjective(f)) rep.failures.push_back("step map at " + where + " is not surjective");
        if (!kernel_is_cyclic(f)) rep.failures.push_back("step map at " + where + " has non-cyclic kernel");
    }
    for (Mask a = 0; a < bit(z.n); ++a)
        for (int e1 = 0; e1 < z.n; ++e1) {
            if (a & bit(e1)) continue;
            for (int e2 = e1 + 1; e2 < z.n; ++e2) {
                if (a & bit(e2)) continue;
                std::string why;
                if (!detail::square_is_pushout(z.step(a, e1), z.step(a, e2), z.step(a | bit(e1), e2),
                                               z.step(a | bit(e2), e1), &why))
                    rep.failures.push_back("square at " + detail::subset_str(a, z.n) + " with " +
                                           std::to_string(e1 + 1) + "," + std::to_string(e2 + 1) + ": " + why);
            }
        }
    return rep;
}

// A square with four corner groups and maps top: TL->TR, left: TL->BL,
// right: TR->BR, bottom: BL->BR, any of which may be left unknown.
struct SquareDiagram {
    Presentation tl, tr, bl, br;
    std::optional<IntMatrix> top, left, right, bottom;
};

namespace detail {
inline bool presentation_is_cyclic(const Presentation& p) { return p.invariants().is_cyclic(); }

// All surjections with cyclic kernel from src to tgt, when enumerable:
// either the source is cyclic (images = generators of a cyclic target)
// or the target is finite (full enumeration).
inline std::vector<IntMatrix> surjections_cyclic_kernel(const Presentation& src,
                                                        const Presentation& tgt) {
    std::vector<IntMatrix> out;
    FgAbGroup tg = tgt.invariants();
    if (presentation_is_cyclic(src)) {
        if (src.ambient == 0) {
            if (tg.is_trivial()) out.push_back(IntMatrix(tgt.ambient, 0));
            return out;
        }
        if (!tg.is_cyclic()) return out;  // no surjection from a cyclic group
        if (tg.is_trivial()) {
            IntMatrix m(tgt.ambient, src.ambient);
            GroupMap f{src, tgt, m};
            if (map_is_well_defined(f)) out.push_back(m);
            return out;
        }
        std::vector<Int> gens;
        if (tg.free_rank == 1) {
            gens = {Int(1), Int(-1)};
        } else {
            Int k = tg.invariant_factors[0];
            for (Int u = 0; u < k; ++u)
                if (gcd(u, k) == 1) gens.push_back(u);
        }
        for (const Int& g : gens) {
            IntMatrix m(tgt.ambient, src.ambient);
            // cyclic canonical presentations have a single generator slot
            m(tgt.ambient - 1, 0) = g;
            GroupMap f{src, tgt, m};
            if (map_is_well_defined(f) && map_is_surjective(f) && kernel_is_cyclic(f)) out.push_back(m);
        }
        return out;
    }
    if (!tg.is_finite())
        throw std::invalid_argument("not enumerable: non-cyclic source with infinite target");
    // enumerate all generator images over the finite target
    std::vector<std::vector<Int>> elems;
    {
        std::vector<Int> cur(tg.invariant_factors.size(), 0);
        while (true) {
            elems.push_back(cur);
            size_t j = 0;
            while (j < cur.size() && ++cur[j] == tg.invariant_factors[j]) cur[j++] = 0;
            if (j == cur.size()) break;
        }
    }
    std::vector<size_t> pick(src.ambient, 0);
    while (true) {
        IntMatrix m(tgt.ambient, src.ambient);
        for (int j = 0; j < src.ambient; ++j)
            for (int i = 0; i < tgt.ambient; ++i) m(i, j) = elems[pick[j]][i];
        GroupMap f{src, tgt, m};
        if (map_is_well_defined(f) && map_is_surjective(f) && kernel_is_cyclic(f)) out.push_back(m);
        size_t j = 0;
        while (j < pick.size() && ++pick[j] == elems.size()) pick[j++] = 0;
        if (j == pick.size() || pick.empty()) break;
    }
    return out;
}
}  // namespace detail

struct SquareCompletion {
    IntMatrix top, left, right, bottom;
    bool commutes = false;
    bool is_pushout = false;
};

struct CompletionReport {
    std::vector<SquareCompletion> candidates;
    bool satisfiable = false;
};

// Enumerate all fillings of the unknown arrows by surjections with
// cyclic kernel; report which fillings commute and form a pushout.
inline CompletionReport complete_square(const SquareDiagram& sq) {
    auto options = [&](const std::optional<IntMatrix>& given, const Presentation& s,
                       const Presentation& t) {
        std::vector<IntMatrix> out;
        if (given) {
            GroupMap f{s, t, *given};
            if (!map_is_well_defined(f)) throw std::invalid_argument("given arrow is not a homomorphism");
            out.push_back(*given);
        } else {
            out = detail::surjections_cyclic_kernel(s, t);
        }
        return out;
    };
    std::vector<IntMatrix> tops = options(sq.top, sq.tl, sq.tr);
    std::vector<IntMatrix> lefts = options(sq.left, sq.tl, sq.bl);
    std::vector<IntMatrix> rights = options(sq.right, sq.tr, sq.br);
    std::vector<IntMatrix> bottoms = options(sq.bottom, sq.bl, sq.br);
    CompletionReport rep;
    for (const auto& tm : tops)
        for (const auto& lm : lefts)
            for (const auto& rm : rights)
                for (const auto& bm : bottoms) {
                    SquareCompletion cand{tm, lm, rm, bm, false, false};
                    GroupMap top{sq.tl, sq.tr, tm}, left{sq.tl, sq.bl, lm};
                    GroupMap right{sq.tr, sq.br, rm}, bottom{sq.bl, sq.br, bm};
                    cand.commutes = maps_equal(compose(right, top), compose(bottom, left));
                    if (cand.commutes)
                        cand.is_pushout = detail::square_is_pushout(top, left, right, bottom);
                    rep.satisfiable = rep.satisfiable || cand.is_pushout;
                    rep.candidates.push_back(std::move(cand));
                }
    return rep;
}

// Rank and multiplicity underlying a matroid over Z: corank equals the
// free rank of the module, multiplicity its torsion order.
inline QuotientData underlying_arithmetic(const ZMatroid& z) {
    QuotientData d;
    for (int i = 0; i < z.n; ++i) d.triple.ground.push_back(std::to_string(i + 1));
    int free_empty = z.module_of(0).invariants().free_rank;
    for (Mask a = 0; a < bit(z.n); ++a) {
        FgAbGroup g = z.module_of(a).invariants();
        d.triple.central[a] = free_empty - g.free_rank;
        d.mult[a] = g.torsion_order();
    }
    return d;
}

// The underlying data of the realizable construction is dual to the
// arithmetic matroid of the defining matrix.
inline bool check_duality(const IntMatrix& a) {
    ZMatroid z = from_matrix(a);
    QuotientData dz = underlying_arithmetic(z);
    QuotientData dx = arithmetic_matroid(make_arrangement(a.rows(), a));
    int n = a.cols();
    Mask full = n == 0 ? 0 : bit(n) - 1;
    int rz_full = dz.rk(full);
    for (Mask i = 0; i <= full; ++i) {
        Mask ic = full & ~i;
        if (dz.m(i) != dx.m(ic)) return false;
        if (dx.rk(ic) != popcount(ic) + dz.rk(i) - rz_full) return false;
        if (i == full) break;
    }
    return true;
}

}  // namespace arimat
