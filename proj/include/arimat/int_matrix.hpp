#pragma once

// Exact integer linear algebra over arbitrary-precision integers:
// matrices, Hermite and Smith normal forms, kernels, determinants,
// minor gcds and rational solving.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arimat {

using Int = mpz_class;
using Rat = mpq_class;

inline int cmp_abs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    IntMatrix(int rows, int cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != size_t(rows) * cols) throw std::invalid_argument("entry count mismatch");
    }
    // Row-major initializer, e.g. IntMatrix::of({{1,1},{1,-1}})
    static IntMatrix of(const std::vector<std::vector<long>>& rows) {
        int r = int(rows.size());
        int c = r ? int(rows[0].size()) : 0;
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (int(rows[i].size()) != c) throw std::invalid_argument("ragged initializer");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(int(d.size()), int(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_zero() const {
        for (const auto& x : e_) if (x != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    IntMatrix select_cols(const std::vector<int>& js) const {
        IntMatrix m(rows_, int(js.size()));
        for (int k = 0; k < int(js.size()); ++k)
            for (int i = 0; i < rows_; ++i) m(i, k) = (*this)(i, js[k]);
        return m;
    }
    IntMatrix select_rows(const std::vector<int>& is) const {
        IntMatrix m(int(is.size()), cols_);
        for (int k = 0; k < int(is.size()); ++k)
            for (int j = 0; j < cols_; ++j) m(k, j) = (*this)(is[k], j);
        return m;
    }

    // Elementary column operations (used by the normal form routines).
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    void add_col(int dst, int src, const Int& coef) {
        for (int i = 0; i < rows_; ++i) (*this)(i, dst) += coef * (*this)(i, src);
    }
    void negate_col(int j) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void add_row(int dst, int src, const Int& coef) {
        for (int j = 0; j < cols_; ++j) (*this)(dst, j) += coef * (*this)(src, j);
    }
    void negate_row(int i) {
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
        }
        return s + "]";
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
    if (a.cols() != int(v.size())) throw std::invalid_argument("matvec shape mismatch");
    std::vector<Int> r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

// Column-style Hermite normal form.
//
// Convention used throughout the library: H = M*U with U unimodular;
// nonzero columns come first in staircase order (pivot rows strictly
// increasing), each pivot (the topmost nonzero entry of its column) is
// positive, and within a pivot row the entries of earlier columns are
// reduced into [0, pivot). Zero columns are trailing.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    std::vector<int> pivot_rows;  // pivot row of column j, for j < rank
    int rank() const { return int(pivot_rows.size()); }
};

inline HnfResult hnf(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.cols()), {}};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int r = 0;
    for (int i = 0; i < m.rows() && r < m.cols(); ++i) {
        while (true) {
            int p = -1;
            for (int j = r; j < m.cols(); ++j)
                if (h(i, j) != 0 && (p < 0 || cmp_abs(h(i, j), h(i, p)) < 0)) p = j;
            if (p < 0) break;
            h.swap_cols(r, p);
            u.swap_cols(r, p);
            bool clean = true;
            for (int j = r + 1; j < m.cols(); ++j) {
                if (h(i, j) == 0) continue;
                Int q = h(i, j) / h(i, r);  // truncated division
                if (q != 0) { h.add_col(j, r, -q); u.add_col(j, r, -q); }
                if (h(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(i, r) == 0) continue;
        if (h(i, r) < 0) { h.negate_col(r); u.negate_col(r); }
        for (int k = 0; k < r; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, k).get_mpz_t(), h(i, r).get_mpz_t());
            if (q != 0) { h.add_col(k, r, -q); u.add_col(k, r, -q); }
        }
        res.pivot_rows.push_back(i);
        ++r;
    }
    return res;
}

inline int rank(const IntMatrix& m) { return hnf(m).rank(); }

// Basis of the integer kernel {x : M x = 0}, returned as columns.
inline IntMatrix kernel(const IntMatrix& m) {
    HnfResult r = hnf(m);
    std::vector<int> zero_cols;
    for (int j = r.rank(); j < m.cols(); ++j) zero_cols.push_back(j);
    return r.u.select_cols(zero_cols);
}

// Smith normal form: U*M*V = S diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SnfResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        int n = std::min(s.rows(), s.cols());
        for (int i = 0; i < n; ++i) d.push_back(s(i, i));
        return d;
    }
};

inline SnfResult snf(const IntMatrix& m) {
    SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = res.s;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j)
                if (s(i, j) != 0 && (pi < 0 || cmp_abs(s(i, j), s(pi, pj)) < 0)) { pi = i; pj = j; }
        if (pi < 0) break;
        s.swap_rows(t, pi); u.swap_rows(t, pi);
        s.swap_cols(t, pj); v.swap_cols(t, pj);
        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < m.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);
                if (q != 0) { s.add_row(i, t, -q); u.add_row(i, t, -q); }
                if (s(i, t) != 0) { s.swap_rows(t, i); u.swap_rows(t, i); dirty = true; }
            }
            for (int j = t + 1; j < m.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                if (q != 0) { s.add_col(j, t, -q); v.add_col(j, t, -q); }
                if (s(t, j) != 0) { s.swap_cols(t, j); v.swap_cols(t, j); dirty = true; }
            }
            if (!dirty) break;
        }
        // enforce divisibility of the remaining block by the pivot
        bool redo = false;
        for (int i = t + 1; i < m.rows() && !redo; ++i)
            for (int j = t + 1; j < m.cols() && !redo; ++j)
                if (s(i, j) % s(t, t) != 0) {
                    s.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                    redo = true;
                }
        if (redo) { --t; continue; }
        if (s(t, t) < 0) { s.negate_row(t); u.negate_row(t); }
    }
    return res;
}

// Exact determinant via fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace detail {
inline bool next_combination(std::vector<int>& c, int n) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}
}  // namespace detail

// gcd of all k x k minors, nonnegative. gcd_minors(M, 0) = 1 by convention;
// 0 when k exceeds the rank (all minors vanish).
inline Int gcd_minors(const IntMatrix& m, int k) {
    if (k < 0 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("gcd_minors: k out of range");
    if (k == 0) return 1;
    Int g = 0;
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = i;
    do {
        for (int i = 0; i < k; ++i) ci[i] = i;
        IntMatrix rows = m.select_rows(ri);
        do {
            Int d = det(rows.select_cols(ci));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            if (g == 1) return g;
        } while (detail::next_combination(ci, m.cols()));
    } while (detail::next_combination(ri, m.rows()));
    return g;
}

// Some rational solution of M x = b, or nullopt if the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& m, const std::vector<Rat>& b) {
    if (int(b.size()) != m.rows()) throw std::invalid_argument("solve_rational: rhs length mismatch");
    int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc + 1));
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nc; ++j) a[i][j] = m(i, j);
        a[i][nc] = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int p = -1;
        for (int i = row; i < nr; ++i)
            if (a[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        Rat inv = 1 / a[row][col];
        for (int j = col; j <= nc; ++j) a[row][j] *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j <= nc; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < nr; ++i)
        if (a[i][nc] != 0) return std::nullopt;
    std::vector<Rat> x(nc, Rat(0));
    for (int i = 0; i < int(pivot_col.size()); ++i) x[pivot_col[i]] = a[i][nc];
    return x;
}

inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& m, const std::vector<Int>& b) {
    std::vector<Rat> rb(b.size());
    for (size_t i = 0; i < b.size(); ++i) rb[i] = b[i];
    return solve_rational(m, rb);
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Solve gens * y = w exactly over Z by staircase back-substitution,
// where gens is in canonical column HNF with the given pivot rows.
inline std::optional<std::vector<Int>> solve_in_basis(const IntMatrix& gens,
                                                      const std::vector<int>& pivot_rows,
                                                      std::vector<Int> w) {
    std::vector<Int> y(gens.cols());
    for (int j = 0; j < gens.cols(); ++j) {
        int p = pivot_rows[j];
        if (w[p] % gens(p, j) != 0) return std::nullopt;
        y[j] = w[p] / gens(p, j);
        if (y[j] != 0)
            for (int i = 0; i < gens.rows(); ++i) w[i] -= y[j] * gens(i, j);
    }
    for (const auto& x : w)
        if (x != 0) return std::nullopt;
    return y;
}

}  // namespace arimat
