#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sumn/rational.hpp"

namespace sumn {

// Element of a supercommutative polynomial algebra: Gaussian-rational
// combinations of monomials in commuting symbols and anticommuting
// (Grassmann) symbols.  A monomial is a sorted multiset of even symbol ids
// plus a strictly sorted set of odd symbol ids.
struct SuperPoly {
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, GaussianRational> terms;

    SuperPoly() = default;

    static SuperPoly constant(GaussianRational c) {
        SuperPoly p;
        if (!c.is_zero()) p.terms[{{}, {}}] = std::move(c);
        return p;
    }
    static SuperPoly even_sym(int id) {
        SuperPoly p;
        p.terms[{{id}, {}}] = GaussianRational(1);
        return p;
    }
    static SuperPoly odd_sym(int id) {
        SuperPoly p;
        p.terms[{{}, {id}}] = GaussianRational(1);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

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

    friend SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
        SuperPoly r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, c);
        return r;
    }
    friend SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
        SuperPoly r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, -c);
        return r;
    }
    friend SuperPoly operator-(const SuperPoly& a) {
        SuperPoly r;
        for (const auto& [k, c] : a.terms) r.terms[k] = -c;
        return r;
    }
    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
        SuperPoly r;
        for (const auto& [k1, c1] : a.terms)
            for (const auto& [k2, c2] : b.terms) {
                // repeated odd symbol squares to zero
                std::vector<int> odd;
                odd.reserve(k1.second.size() + k2.second.size());
                odd.insert(odd.end(), k1.second.begin(), k1.second.end());
                odd.insert(odd.end(), k2.second.begin(), k2.second.end());
                int sign = 1;
                bool dead = false;
                for (size_t i = 0; i < odd.size() && !dead; ++i)
                    for (size_t j = i + 1; j < odd.size(); ++j) {
                        if (odd[i] == odd[j]) { dead = true; break; }
                        if (odd[i] > odd[j]) sign = -sign;
                    }
                if (dead) continue;
                std::sort(odd.begin(), odd.end());
                std::vector<int> even;
                even.reserve(k1.first.size() + k2.first.size());
                std::merge(k1.first.begin(), k1.first.end(), k2.first.begin(), k2.first.end(),
                           std::back_inserter(even));
                GaussianRational c = c1 * c2;
                if (sign < 0) c = -c;
                r.add_term({std::move(even), std::move(odd)}, c);
            }
        return r;
    }
    friend SuperPoly operator*(const SuperPoly& a, const GaussianRational& s) {
        SuperPoly r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms) r.terms[k] = c * s;
        return r;
    }
    friend bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

    // Left derivative with respect to a symbol.
    SuperPoly lderiv(int sym, bool is_odd) const {
        SuperPoly r;
        for (const auto& [k, c] : terms) {
            if (is_odd) {
                auto it = std::find(k.second.begin(), k.second.end(), sym);
                if (it == k.second.end()) continue;
                int idx = int(it - k.second.begin());
                Key k2 = k;
                k2.second.erase(k2.second.begin() + idx);
                r.add_term(k2, idx % 2 == 0 ? c : -c);
            } else {
                int cnt = int(std::count(k.first.begin(), k.first.end(), sym));
                if (cnt == 0) continue;
                Key k2 = k;
                k2.first.erase(std::find(k2.first.begin(), k2.first.end(), sym));
                r.add_term(k2, c * GaussianRational(cnt));
            }
        }
        return r;
    }

    // Split by parity of the Grassmann degree (envelope grading).
    std::pair<SuperPoly, SuperPoly> parity_split() const {
        SuperPoly ev, od;
        for (const auto& [k, c] : terms)
            (k.second.size() % 2 == 0 ? ev : od).terms[k] = c;
        return {ev, od};
    }

    // Substitute symbols: an even symbol becomes a plain number; an odd
    // symbol becomes value times a replacement Grassmann generator.
    struct Subst {
        GaussianRational value;
        std::optional<int> odd_gen;  // required for odd symbols
    };
    SuperPoly substitute(const std::map<int, Subst>& even_map,
                         const std::map<int, Subst>& odd_map) const {
        SuperPoly r;
        for (const auto& [k, c] : terms) {
            GaussianRational coeff = c;
            for (int s : k.first) {
                auto it = even_map.find(s);
                if (it == even_map.end()) throw std::invalid_argument("missing even substitution");
                coeff *= it->second.value;
            }
            if (coeff.is_zero()) continue;
            std::vector<int> gens;
            gens.reserve(k.second.size());
            bool dead = false;
            for (int s : k.second) {
                auto it = odd_map.find(s);
                if (it == odd_map.end()) throw std::invalid_argument("missing odd substitution");
                coeff *= it->second.value;
                if (coeff.is_zero()) { dead = true; break; }
                gens.push_back(*it->second.odd_gen);
            }
            if (dead) continue;
            int sign = 1;
            for (size_t i = 0; i < gens.size() && !dead; ++i)
                for (size_t j = i + 1; j < gens.size(); ++j) {
                    if (gens[i] == gens[j]) { dead = true; break; }
                    if (gens[i] > gens[j]) sign = -sign;
                }
            if (dead) continue;
            std::sort(gens.begin(), gens.end());
            if (sign < 0) coeff = -coeff;
            r.add_term({{}, std::move(gens)}, coeff);
        }
        return r;
    }
};

using SMat = std::vector<std::vector<SuperPoly>>;

inline SMat smat_zero(int d) { return SMat(d, std::vector<SuperPoly>(d)); }

// Product of supermatrices in the Grassmann envelope: entries are split by
// Grassmann-coefficient parity and combined as X0Y0 + X0Y1 + X1Y0 - X1Y1.
inline SMat envelope_mul(const SMat& x, const SMat& y) {
    int d = int(x.size());
    SMat r = smat_zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            SuperPoly acc;
            for (int k = 0; k < d; ++k) {
                auto [x0, x1] = x[i][k].parity_split();
                auto [y0, y1] = y[k][j].parity_split();
                acc = acc + x0 * y0 + x0 * y1 + x1 * y0 - x1 * y1;
            }
            r[i][j] = acc;
        }
    return r;
}

inline SMat smat_add(const SMat& x, const SMat& y) {
    int d = int(x.size());
    SMat r = smat_zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r[i][j] = x[i][j] + y[i][j];
    return r;
}

inline SMat smat_sub(const SMat& x, const SMat& y) {
    int d = int(x.size());
    SMat r = smat_zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r[i][j] = x[i][j] - y[i][j];
    return r;
}

}  // namespace sumn
