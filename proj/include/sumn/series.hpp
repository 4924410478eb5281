#pragma once

#include <stdexcept>
#include <vector>

#include "sumn/laurent.hpp"
#include "sumn/rational.hpp"

namespace sumn {

// Truncated power series in eps = 2*pi/k, exact Gaussian-rational
// coefficients, everything cut off consistently at `order`.
struct EpsSeries {
    int order = 0;
    std::vector<GaussianRational> c;  // size order+1

    EpsSeries() : c(1) {}
    explicit EpsSeries(int ord) : order(ord), c(ord + 1) {}

    static EpsSeries constant(GaussianRational v, int ord) {
        EpsSeries s(ord);
        s.c[0] = std::move(v);
        return s;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
        check(a, b);
        EpsSeries r(a.order);
        for (int n = 0; n <= a.order; ++n) r.c[n] = a.c[n] + b.c[n];
        return r;
    }
    friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) {
        check(a, b);
        EpsSeries r(a.order);
        for (int n = 0; n <= a.order; ++n) r.c[n] = a.c[n] - b.c[n];
        return r;
    }
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
        check(a, b);
        EpsSeries r(a.order);
        for (int n = 0; n <= a.order; ++n)
            for (int m = 0; n + m <= a.order; ++m) r.c[n + m] += a.c[n] * b.c[m];
        return r;
    }
    friend bool operator==(const EpsSeries& a, const EpsSeries& b) {
        return a.order == b.order && a.c == b.c;
    }
    friend bool operator!=(const EpsSeries& a, const EpsSeries& b) { return !(a == b); }

    // Multiplicative inverse, requires a unit constant term.
    EpsSeries inverse() const {
        if (c[0].is_zero()) throw std::domain_error("series not invertible");
        EpsSeries r(order);
        r.c[0] = GaussianRational(1) / c[0];
        for (int n = 1; n <= order; ++n) {
            GaussianRational acc;
            for (int m = 1; m <= n; ++m) acc += c[m] * r.c[n - m];
            r.c[n] = -acc / c[0];
        }
        return r;
    }

  private:
    static void check(const EpsSeries& a, const EpsSeries& b) {
        if (a.order != b.order) throw std::invalid_argument("series order mismatch");
    }
};

// q^r with q = e^{-i eps}: coefficient of eps^n is (-i r)^n / n!.
inline EpsSeries q_power_series(const Rational& r, int order) {
    if (order < 0 || order > 4) throw std::invalid_argument("series order must be in [0,4]");
    EpsSeries s(order);
    GaussianRational term(1);
    GaussianRational step = GaussianRational(Rational(0), -r);  // -i r
    s.c[0] = term;
    for (int n = 1; n <= order; ++n) {
        term = term * step;
        term = term * GaussianRational(Rational(1, n));
        s.c[n] = term;
    }
    return s;
}

// Expand a polynomial in u = q^{1/denom} as a series in eps, term by term.
inline EpsSeries expand_laurent_to_series(const LaurentUni& p, long denom, int order) {
    if (denom == 0) throw std::invalid_argument("denom must be nonzero");
    EpsSeries s(order);
    for (const auto& [e, coeff] : p.terms) {
        EpsSeries t = q_power_series(rat(e, denom), order);
        for (int n = 0; n <= order; ++n) s.c[n] += coeff * t.c[n];
    }
    return s;
}

}  // namespace sumn
