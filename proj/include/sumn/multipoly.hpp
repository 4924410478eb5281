#pragma once

#include <array>
#include <map>

#include "sumn/rational.hpp"

namespace sumn {

// Polynomial in the three coordinates x^1, x^2, x^3 with Gaussian-rational
// coefficients; supports exact partial differentiation and evaluation.
struct MultiPoly3 {
    using Key = std::array<int, 3>;
    std::map<Key, GaussianRational> terms;

    MultiPoly3() = default;

    static MultiPoly3 constant(GaussianRational c) {
        MultiPoly3 p;
        if (!c.is_zero()) p.terms[{0, 0, 0}] = std::move(c);
        return p;
    }
    static MultiPoly3 monomial(Key deg, GaussianRational c) {
        MultiPoly3 p;
        if (!c.is_zero()) p.terms[deg] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [k, c] : terms) d = std::max(d, k[0] + k[1] + k[2]);
        return d;
    }

    void add_term(const Key& k, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend MultiPoly3 operator+(const MultiPoly3& a, const MultiPoly3& b) {
        MultiPoly3 r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, c);
        return r;
    }
    friend MultiPoly3 operator-(const MultiPoly3& a, const MultiPoly3& b) {
        MultiPoly3 r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, -c);
        return r;
    }
    friend MultiPoly3 operator*(const MultiPoly3& a, const MultiPoly3& b) {
        MultiPoly3 r;
        for (const auto& [k1, c1] : a.terms)
            for (const auto& [k2, c2] : b.terms)
                r.add_term({k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]}, c1 * c2);
        return r;
    }
    friend bool operator==(const MultiPoly3& a, const MultiPoly3& b) { return a.terms == b.terms; }

    // d/dx^mu, mu in {0,1,2}
    MultiPoly3 diff(int mu) const {
        MultiPoly3 r;
        for (const auto& [k, c] : terms) {
            if (k[mu] == 0) continue;
            Key k2 = k;
            k2[mu] -= 1;
            r.add_term(k2, c * GaussianRational(k[mu]));
        }
        return r;
    }

    GaussianRational eval(const std::array<Rational, 3>& x) const {
        GaussianRational acc;
        for (const auto& [k, c] : terms) {
            Rational m(1);
            for (int mu = 0; mu < 3; ++mu)
                for (int j = 0; j < k[mu]; ++j) m *= x[mu];
            acc += c * GaussianRational(m);
        }
        return acc;
    }
};

}  // namespace sumn
