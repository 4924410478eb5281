#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "sumn/rational.hpp"

namespace sumn {

// Univariate Laurent polynomial over Gaussian rationals.  The variable is
// the uniformizer u = q^{1/(2(M-N))}, so every half-integer q-power of
// interest has an integer exponent here.
struct LaurentUni {
    std::map<long, GaussianRational> terms;  // exponent -> coefficient, no zeros stored

    LaurentUni() = default;

    static LaurentUni constant(GaussianRational c) {
        LaurentUni p;
        if (!c.is_zero()) p.terms[0] = std::move(c);
        return p;
    }
    static LaurentUni u_pow(long e, GaussianRational c = GaussianRational(1)) {
        LaurentUni p;
        if (!c.is_zero()) p.terms[e] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(long e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend LaurentUni operator+(const LaurentUni& a, const LaurentUni& b) {
        LaurentUni r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend LaurentUni operator-(const LaurentUni& a, const LaurentUni& b) {
        LaurentUni r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }
    friend LaurentUni operator-(const LaurentUni& a) {
        LaurentUni r;
        for (const auto& [e, c] : a.terms) r.terms[e] = -c;
        return r;
    }
    friend LaurentUni operator*(const LaurentUni& a, const LaurentUni& b) {
        LaurentUni r;
        for (const auto& [e1, c1] : a.terms)
            for (const auto& [e2, c2] : b.terms) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    friend bool operator==(const LaurentUni& a, const LaurentUni& b) { return a.terms == b.terms; }
    friend bool operator!=(const LaurentUni& a, const LaurentUni& b) { return !(a == b); }
};

// Exact division; throws if the division does not come out exact.
inline LaurentUni exact_div(const LaurentUni& num, const LaurentUni& den) {
    if (den.is_zero()) throw std::domain_error("laurent division by zero");
    if (num.is_zero()) return {};
    LaurentUni r = num, q;
    long dlead = den.terms.rbegin()->first;
    const GaussianRational& dc = den.terms.rbegin()->second;
    // Exponent floor for an exact quotient: below it the division cannot
    // come out exact, so bail instead of running forever.
    long emin = num.terms.begin()->first - den.terms.begin()->first;
    while (!r.is_zero()) {
        long rlead = r.terms.rbegin()->first;
        GaussianRational f = r.terms.rbegin()->second / dc;
        long e = rlead - dlead;
        if (e < emin) throw std::domain_error("laurent division not exact");
        q.add_term(e, f);
        LaurentUni m = LaurentUni::u_pow(e, f);
        r = r - m * den;
        if (!r.is_zero() && r.terms.rbegin()->first >= rlead)
            throw std::domain_error("laurent division does not terminate");
    }
    return q;
}

inline LaurentUni pow(const LaurentUni& p, long n) {
    LaurentUni r = LaurentUni::constant(GaussianRational(1));
    for (long i = 0; i < n; ++i) r = r * p;
    return r;
}

// Bivariate Laurent polynomial in (t, z).
struct LaurentBi {
    std::map<std::pair<long, long>, GaussianRational> terms;  // (t-exp, z-exp) -> coeff

    LaurentBi() = default;

    static LaurentBi constant(GaussianRational c) {
        LaurentBi p;
        if (!c.is_zero()) p.terms[{0, 0}] = std::move(c);
        return p;
    }
    static LaurentBi tz(long et, long ez, GaussianRational c = GaussianRational(1)) {
        LaurentBi p;
        if (!c.is_zero()) p.terms[{et, ez}] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(long et, long ez, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(et, ez);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend LaurentBi operator+(const LaurentBi& a, const LaurentBi& b) {
        LaurentBi r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
        return r;
    }
    friend LaurentBi operator-(const LaurentBi& a, const LaurentBi& b) {
        LaurentBi r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend LaurentBi operator-(const LaurentBi& a) {
        LaurentBi r;
        for (const auto& [k, c] : a.terms) r.terms[k] = -c;
        return r;
    }
    friend LaurentBi operator*(const LaurentBi& a, const LaurentBi& b) {
        LaurentBi r;
        for (const auto& [k1, c1] : a.terms)
            for (const auto& [k2, c2] : b.terms)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    friend bool operator==(const LaurentBi& a, const LaurentBi& b) { return a.terms == b.terms; }
    friend bool operator!=(const LaurentBi& a, const LaurentBi& b) { return !(a == b); }
};

// Substitution t = q^{(M-N)/2}, z = q^{1/2} - q^{-1/2} into the uniformizer
// u = q^{1/(2(M-N))}:  t^a z^b -> u^{a mn^2} (u^mn - u^-mn)^b.  Negative z
// exponents are cleared by exact division, which must succeed for any value
// the skein recursion produces.
inline LaurentUni specialize(const LaurentBi& p, long mn) {
    if (mn == 0) throw std::invalid_argument("specialize needs M-N != 0");
    long zmin = 0;
    for (const auto& [k, c] : p.terms) zmin = std::min(zmin, k.second);
    LaurentUni zimg;
    zimg.add_term(mn, GaussianRational(1));
    zimg.add_term(-mn, GaussianRational(-1));
    LaurentUni num;
    for (const auto& [k, c] : p.terms) {
        LaurentUni t = LaurentUni::u_pow(k.first * mn * mn, c) * pow(zimg, k.second - zmin);
        num = num + t;
    }
    if (zmin == 0) return num;
    return exact_div(num, pow(zimg, -zmin));
}

}  // namespace sumn
