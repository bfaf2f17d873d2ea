#pragma once

// Exact integer-coefficient polynomials in one and two variables, with a
// canonical text form: terms by total degree descending, then first-variable
// degree descending; single spaces around binary + and -.

#include "int_matrix.hpp"

#include <map>
#include <sstream>

namespace arimat {

struct UniPoly {
    std::map<int, Int> c;  // exponent -> coefficient, no zeros stored

    static UniPoly constant(Int v) {
        UniPoly p;
        if (v != 0) p.c[0] = std::move(v);
        return p;
    }
    static UniPoly variable() {
        UniPoly p;
        p.c[1] = 1;
        return p;
    }
    void add_term(int e, const Int& v) {
        if (v == 0) return;
        Int& slot = c[e];
        slot += v;
        if (slot == 0) c.erase(e);
    }
    bool operator==(const UniPoly& o) const { return c == o.c; }
    Int eval(const Int& t) const {
        Int acc = 0;
        for (const auto& [e, v] : c) {
            Int p;
            mpz_pow_ui(p.get_mpz_t(), t.get_mpz_t(), e);
            acc += v * p;
        }
        return acc;
    }
};

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    for (const auto& [e, v] : b.c) r.add_term(e, v);
    return r;
}
inline UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    for (const auto& [e, v] : b.c) r.add_term(e, -v);
    return r;
}
inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [e1, v1] : a.c)
        for (const auto& [e2, v2] : b.c) r.add_term(e1 + e2, v1 * v2);
    return r;
}
inline UniPoly operator*(const Int& k, const UniPoly& a) {
    UniPoly r;
    for (const auto& [e, v] : a.c) r.add_term(e, k * v);
    return r;
}
inline UniPoly pow(const UniPoly& a, int n) {
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

struct BivariatePoly {
    std::map<std::pair<int, int>, Int> c;  // (x-exp, y-exp) -> coefficient

    static BivariatePoly constant(Int v) {
        BivariatePoly p;
        if (v != 0) p.c[{0, 0}] = std::move(v);
        return p;
    }
    void add_term(int ex, int ey, const Int& v) {
        if (v == 0) return;
        Int& slot = c[{ex, ey}];
        slot += v;
        if (slot == 0) c.erase({ex, ey});
    }
    bool operator==(const BivariatePoly& o) const { return c == o.c; }

    // substitute x := px(t), y := py(t)
    UniPoly substitute(const UniPoly& px, const UniPoly& py) const {
        UniPoly acc;
        for (const auto& [exps, v] : c)
            acc = acc + v * (pow(px, exps.first) * pow(py, exps.second));
        return acc;
    }
    Int eval(const Int& x, const Int& y) const {
        Int acc = 0;
        for (const auto& [exps, v] : c) {
            Int px, py;
            mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), exps.first);
            mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), exps.second);
            acc += v * px * py;
        }
        return acc;
    }
};

inline BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [e, v] : b.c) r.add_term(e.first, e.second, v);
    return r;
}
inline BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [e, v] : b.c) r.add_term(e.first, e.second, -v);
    return r;
}
inline BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [e1, v1] : a.c)
        for (const auto& [e2, v2] : b.c)
            r.add_term(e1.first + e2.first, e1.second + e2.second, v1 * v2);
    return r;
}
inline BivariatePoly operator*(const Int& k, const BivariatePoly& a) {
    BivariatePoly r;
    for (const auto& [e, v] : a.c) r.add_term(e.first, e.second, k * v);
    return r;
}

// (x-1)^a (y-1)^b expanded; the workhorse of the Tutte sums.
inline BivariatePoly corank_nullity_term(int a, int b) {
    BivariatePoly x1;
    x1.add_term(1, 0, 1);
    x1.add_term(0, 0, -1);
    BivariatePoly y1;
    y1.add_term(0, 1, 1);
    y1.add_term(0, 0, -1);
    BivariatePoly r = BivariatePoly::constant(1);
    for (int i = 0; i < a; ++i) r = r * x1;
    for (int i = 0; i < b; ++i) r = r * y1;
    return r;
}

// product of univariate polynomials in x and in y, as a bivariate polynomial
inline BivariatePoly outer_product(const UniPoly& px, const UniPoly& py) {
    BivariatePoly r;
    for (const auto& [ex, vx] : px.c)
        for (const auto& [ey, vy] : py.c) r.add_term(ex, ey, vx * vy);
    return r;
}

namespace detail {
inline void append_term(std::ostringstream& out, bool first, const Int& coef, const std::string& vars) {
    Int a = coef < 0 ? Int(-coef) : coef;
    if (first) {
        if (coef < 0) out << "-";
    } else {
        out << (coef < 0 ? " - " : " + ");
    }
    if (vars.empty()) out << a.get_str();
    else if (a == 1) out << vars;
    else out << a.get_str() << vars;
}
inline std::string power_str(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}
}  // namespace detail

inline std::string to_string(const BivariatePoly& p, const std::string& xv = "x",
                             const std::string& yv = "y") {
    if (p.c.empty()) return "0";
    // canonical order: total degree descending, then x-degree descending
    std::vector<std::pair<std::pair<int, int>, Int>> terms(p.c.begin(), p.c.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, v] : terms) {
        detail::append_term(out, first, v, detail::power_str(xv, e.first) + detail::power_str(yv, e.second));
        first = false;
    }
    return out.str();
}

inline std::string to_string(const UniPoly& p, const std::string& tv = "t") {
    if (p.c.empty()) return "0";
    std::vector<std::pair<int, Int>> terms(p.c.begin(), p.c.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, v] : terms) {
        detail::append_term(out, first, v, detail::power_str(tv, e));
        first = false;
    }
    return out.str();
}

}  // namespace arimat
