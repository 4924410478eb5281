#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>

#include "sumn/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<sumn::GaussianRational> {
    typedef sumn::Rational Real;
    typedef sumn::GaussianRational NonInteger;
    typedef sumn::GaussianRational Nested;
    typedef sumn::GaussianRational Literal;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace sumn {

using Mat = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;

struct AlgebraContext {
    int M, N;
    AlgebraContext(int m, int n) : M(m), N(n) {
        if (m < 1 || n < 1) throw std::invalid_argument("M, N must be positive");
        if (m == n) throw std::invalid_argument("M = N is not allowed");
        if (m + n < 2) throw std::invalid_argument("dimension must be at least 2");
    }
    int dim() const { return M + N; }
    int mn() const { return M - N; }
};

// Z2-grading of an index: 0 for 1..M, 1 for M+1..M+N.
int grading(int a, const AlgebraContext& ctx);

// Matrix with an optional homogeneity tag ([a]+[b] mod 2 of its basis span).
struct GradedMatrix {
    Mat m;
    std::optional<int> grade;
};

Mat matrix_unit(int a, int b, const AlgebraContext& ctx);
GradedMatrix ehat(int a, int b, const AlgebraContext& ctx);

enum class GenKind { E, F, H };
// E_ab = (i/2)(ehat_ab - ehat_ba), F_ab = (1/2)(ehat_ab + ehat_ba),
// H_cc = sum_{l<=c} l (ehat_ll - ehat_{l+1,l+1}).
GradedMatrix generators(GenKind kind, int a, int b, const AlgebraContext& ctx);

GaussianRational supertrace(const Mat& x, const AlgebraContext& ctx);

// [X,Y] = XY - (-1)^{[X][Y]} YX on homogeneous elements.
GradedMatrix super_bracket(const GradedMatrix& x, const GradedMatrix& y);

// Right side of the super commutation relation for [ehat_ab, ehat_cd].
Mat commutation_rhs(int a, int b, int c, int d, const AlgebraContext& ctx);

// Closed forms for Str(ehat_ab ehat_cd) and Str(ehat_ab ehat_cd ehat_ef).
GaussianRational str2_closed(int a, int b, int c, int d, const AlgebraContext& ctx);
GaussianRational str3_closed(int a, int b, int c, int d, int e, int f, const AlgebraContext& ctx);

// Fierz identity: lhs summed explicitly over the ehat basis, rhs closed form.
GaussianRational fierz_lhs(int i, int j, int k, int l, const AlgebraContext& ctx);
GaussianRational fierz_rhs(int i, int j, int k, int l, const AlgebraContext& ctx);

// Casimir operator sum_{a,b} (-1)^{[b]} ehat_ab ehat_ba and its scalar
// C2 = ((M-N)^2 - 1)/(2(M-N)); the operator equals 2 C2 I.
Mat casimir(const AlgebraContext& ctx);
Rational casimir_value(const AlgebraContext& ctx);

}  // namespace sumn
