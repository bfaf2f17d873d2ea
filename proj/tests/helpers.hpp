#pragma once

// Shared test fixtures and independent oracles. The affine-arrangement
// builder is the geometric oracle used to cross-check combinatorial
// constructions; it decides centrality by rational linear solving only.

#include "arimat/semimatroid.hpp"
#include "arimat/int_matrix.hpp"

#include <random>

namespace testutil {

using namespace arimat;

inline LocallyRankedTriple uniform_matroid(int r, int n, std::vector<std::string> labels = {}) {
    LocallyRankedTriple t;
    if (labels.empty())
        for (int i = 0; i < n; ++i) t.ground.push_back(std::string(1, char('a' + i)));
    else
        t.ground = std::move(labels);
    for (Mask x = 0; x < bit(n); ++x) t.central[x] = std::min(popcount(x), r);
    return t;
}

inline LocallyRankedTriple free_matroid(int n) { return uniform_matroid(n, n); }

// Linear matroid of integer column vectors: rank of a subset is the rank
// of the chosen columns. Every subset is central.
inline LocallyRankedTriple linear_matroid(const IntMatrix& a) {
    LocallyRankedTriple t;
    for (int i = 0; i < a.cols(); ++i) t.ground.push_back("v" + std::to_string(i));
    for (Mask x = 0; x < bit(a.cols()); ++x) {
        std::vector<int> cols;
        for (int i = 0; i < a.cols(); ++i)
            if (x & bit(i)) cols.push_back(i);
        t.central[x] = rank(a.select_cols(cols));
    }
    return t;
}

struct AffineHyperplane {
    std::vector<Int> normal;
    Int offset;
};

// Semimatroid of an affine arrangement: a subset is central iff the
// corresponding linear system has a rational solution; rank is the rank
// of the normal vectors.
inline LocallyRankedTriple affine_arrangement_semimatroid(const std::vector<AffineHyperplane>& hs,
                                                          int dim) {
    LocallyRankedTriple t;
    int n = int(hs.size());
    for (int i = 0; i < n; ++i) t.ground.push_back("h" + std::to_string(i));
    for (Mask x = 0; x < bit(n); ++x) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (x & bit(i)) idx.push_back(i);
        IntMatrix m(int(idx.size()), dim);
        std::vector<Int> b(idx.size());
        for (size_t k = 0; k < idx.size(); ++k) {
            for (int j = 0; j < dim; ++j) m(int(k), j) = hs[idx[k]].normal[j];
            b[k] = hs[idx[k]].offset;
        }
        if (solve_rational(m, b)) t.central[x] = rank(m);
    }
    return t;
}

inline std::vector<AffineHyperplane> random_arrangement(std::mt19937& rng, int dim, int count) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<AffineHyperplane> hs;
    while (int(hs.size()) < count) {
        AffineHyperplane h;
        h.normal.resize(dim);
        bool nonzero = false;
        for (int j = 0; j < dim; ++j) {
            h.normal[j] = coef(rng);
            if (h.normal[j] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        h.offset = coef(rng);
        // skip exact duplicates so the semimatroid stays simple
        bool dup = false;
        for (const auto& g : hs) {
            // duplicate iff (normal, offset) rows are proportional
            IntMatrix two(2, dim + 1);
            for (int j = 0; j < dim; ++j) {
                two(0, j) = g.normal[j];
                two(1, j) = h.normal[j];
            }
            two(0, dim) = g.offset;
            two(1, dim) = h.offset;
            if (rank(two) < 2) dup = true;
        }
        if (!dup) hs.push_back(h);
    }
    return hs;
}

// A finite window of the recurring pseudoline family: five label classes
// a,b,c,d,e with indices in [lo, hi]; c- and e-classes are mutually
// parallel, everything else crosses per the index rules below.
inline LocallyRankedTriple pseudoline_window(int lo, int hi) {
    LocallyRankedTriple t;
    auto in = [&](int i) { return i >= lo && i <= hi; };
    std::vector<std::pair<char, int>> elems;
    for (char f : {'a', 'b', 'c', 'd', 'e'})
        for (int i = lo; i <= hi; ++i) elems.push_back({f, i});
    auto idx = [&](char f, int i) -> int {
        for (size_t k = 0; k < elems.size(); ++k)
            if (elems[k].first == f && elems[k].second == i) return int(k);
        return -1;
    };
    for (auto [f, i] : elems) t.ground.push_back(std::string(1, f) + std::to_string(i));

    auto add = [&](std::vector<int> members, int r) {
        Mask m = 0;
        for (int k : members) {
            if (k < 0) return;
            m |= bit(k);
        }
        t.central[m] = r;
    };
    add({}, 0);
    for (size_t k = 0; k < elems.size(); ++k) t.central[bit(int(k))] = 1;
    // crossing pairs: all except c-c, e-e, c-e and same-class pairs
    static const char* crossing[] = {"ab", "ac", "ad", "ae", "bc", "bd", "be", "cd", "de"};
    for (const char* pr : crossing)
        for (int i = lo; i <= hi; ++i)
            for (int j = lo; j <= hi; ++j) add({idx(pr[0], i), idx(pr[1], j)}, 2);
    // triple and quadruple points
    for (int i = lo - 2 * (hi - lo) - 2; i <= hi + 2 * (hi - lo) + 2; ++i)
        for (int k = lo - 2 * (hi - lo) - 2; k <= hi + 2 * (hi - lo) + 2; ++k) {
            if (in(2 * i + k) && in(2 * i - k)) {
                if (in(k)) add({idx('a', 2 * i + k), idx('b', 2 * i - k), idx('c', k)}, 2);
                if (in(i)) add({idx('a', 2 * i + k), idx('b', 2 * i - k), idx('d', i)}, 2);
                if (in(k) && in(i)) {
                    add({idx('a', 2 * i + k), idx('c', k), idx('d', i)}, 2);
                    add({idx('b', 2 * i - k), idx('c', k), idx('d', i)}, 2);
                    add({idx('a', 2 * i + k), idx('b', 2 * i - k), idx('c', k), idx('d', i)}, 2);
                }
            }
            if (in(k) && in(k - 2 * i - 1) && in(i)) add({idx('a', k), idx('b', k - 2 * i - 1), idx('e', i)}, 2);
        }
    return t;
}

inline bool triples_equal(const LocallyRankedTriple& a, const LocallyRankedTriple& b) {
    return a.ground == b.ground && a.central == b.central;
}

}  // namespace testutil
