#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace sumn {

// Arbitrary-precision rational, always stored reduced with positive
// denominator (mpq_class canonical form).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { re += b.re; im += b.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { re -= b.re; im -= b.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    friend GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }
    friend Rational real(const GaussianRational& a) { return a.re; }
    friend Rational imag(const GaussianRational& a) { return a.im; }
};

inline std::string to_string(const GaussianRational& v) {
    std::string s = v.re.get_str();
    if (v.im != 0) {
        s += (v.im > 0 ? "+" : "-");
        Rational a = abs(v.im);
        if (a != 1) s += a.get_str() + "*";
        s += "i";
    }
    return s;
}

}  // namespace sumn
