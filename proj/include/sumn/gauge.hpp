#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sumn/multipoly.hpp"
#include "sumn/superalgebra.hpp"
#include "sumn/superpoly.hpp"

namespace sumn {

// Components of the gauge field are valued in a Grassmann envelope: a
// component with odd grading [a]+[b] is a number times an anticommuting
// generator, an even component is a plain number.  All matrix products in
// this module are envelope products (see superpoly.hpp).

// Symbol id layout for the gauge field components A_mu^{ab} and the
// derivative placeholders D_{nu rho}^{ab} standing for d_nu A_rho^{ab}.
struct GaugeSymbols {
    int d;
    explicit GaugeSymbols(const AlgebraContext& ctx) : d(ctx.dim()) {}
    int A(int mu, int a, int b) const { return (mu * d + (a - 1)) * d + (b - 1); }
    int D(int nu, int rho, int a, int b) const {
        return 3 * d * d + ((nu * 3 + rho) * d + (a - 1)) * d + (b - 1);
    }
};

// Point values for the field and its first derivatives.
struct FieldPoint {
    int d;
    std::vector<GaussianRational> Aval;  // 3*d*d, index (mu, a, b)
    std::vector<GaussianRational> Dval;  // 9*d*d, index (nu, rho, a, b)
    // When set, the Grassmann generator behind an odd derivative value is
    // the generator of the underlying field component (derivatives of a
    // field p(x) theta point along the same theta).  When unset, each odd
    // derivative carries its own independent generator.
    bool tie_derivative_generators = false;

    explicit FieldPoint(const AlgebraContext& ctx)
        : d(ctx.dim()), Aval(3 * d * d), Dval(9 * d * d) {}
    GaussianRational& a(int mu, int a_, int b_) { return Aval[(mu * d + a_ - 1) * d + b_ - 1]; }
    const GaussianRational& a(int mu, int a_, int b_) const {
        return Aval[(mu * d + a_ - 1) * d + b_ - 1];
    }
    GaussianRational& dv(int nu, int rho, int a_, int b_) {
        return Dval[((nu * 3 + rho) * d + a_ - 1) * d + b_ - 1];
    }
    const GaussianRational& dv(int nu, int rho, int a_, int b_) const {
        return Dval[((nu * 3 + rho) * d + a_ - 1) * d + b_ - 1];
    }
};

// Entry (i,j) of ehat_ab, as a rational number.
Rational ehat_entry(int a, int b, int i, int j, const AlgebraContext& ctx);

// Component form of the field tensor:
// F_{mu nu}^{ab} = D_{mu nu}^{ab} - D_{nu mu}^{ab}
//   - (-1)^{([a]+[c])([c]+[b])} (A_mu^{ac} A_nu^{cb} - A_nu^{ac} A_mu^{cb}).
SuperPoly field_strength_component(const FieldPoint& p, int mu, int nu, int a, int b,
                                   const AlgebraContext& ctx);

// Matrix form dA - dA - [A, A] in the envelope, over the ehat basis.
SMat field_strength_matrix(const FieldPoint& p, int mu, int nu, const AlgebraContext& ctx);

// sum_{a,b} comp(a,b) ehat_ab as a matrix of SuperPoly entries.
SMat contract_ehat(const std::function<SuperPoly(int, int)>& comp, const AlgebraContext& ctx);

// The two routes to the action density (k/4pi prefactor omitted).
SuperPoly action_density_component(const FieldPoint& p, const AlgebraContext& ctx);
SuperPoly action_density_strform(const FieldPoint& p, const AlgebraContext& ctx);

// Gauge field with polynomial components of degree <= 2.
struct PolyGaugeField {
    int d;
    std::vector<MultiPoly3> comp;  // 3*d*d, index (mu, a, b)
    explicit PolyGaugeField(const AlgebraContext& ctx) : d(ctx.dim()), comp(3 * d * d) {}
    MultiPoly3& at(int mu, int a, int b) { return comp[(mu * d + a - 1) * d + b - 1]; }
    const MultiPoly3& at(int mu, int a, int b) const { return comp[(mu * d + a - 1) * d + b - 1]; }
};

// Exact evaluation of the field and its first derivatives at a point.
FieldPoint eval_field(const PolyGaugeField& f, const std::array<Rational, 3>& x,
                      const AlgebraContext& ctx);

struct FieldEqReport {
    bool ok = true;
    std::string detail;  // first mismatch, empty when ok
};

// Checks whether the Euler-Lagrange derivative of the action density,
// contracted as (1/2) eps^{mu nu rho} (-1)^{[b]} EL_rho^{ab} ehat_ba,
// equals F_{mu nu}^{ba} ehat_ba at the sample point.
FieldEqReport field_equation_check(const PolyGaugeField& f, const std::array<Rational, 3>& x,
                                   const AlgebraContext& ctx);

std::string superpoly_str(const SuperPoly& p);

}  // namespace sumn
