#include "sumn/superalgebra.hpp"

namespace sumn {

namespace {
int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }
int kron(int a, int b) { return a == b ? 1 : 0; }
}  // namespace

int grading(int a, const AlgebraContext& ctx) {
    if (a < 1 || a > ctx.dim()) throw std::out_of_range("index out of range");
    return a <= ctx.M ? 0 : 1;
}

Mat matrix_unit(int a, int b, const AlgebraContext& ctx) {
    int d = ctx.dim();
    if (a < 1 || a > d || b < 1 || b > d) throw std::out_of_range("index out of range");
    Mat m = Mat::Zero(d, d);
    m(a - 1, b - 1) = GaussianRational(1);
    return m;
}

GradedMatrix ehat(int a, int b, const AlgebraContext& ctx) {
    int d = ctx.dim();
    Mat m = matrix_unit(a, b, ctx);
    if (a == b) {
        GaussianRational shift(rat(sign_pow(grading(a, ctx)), ctx.mn()));
        for (int i = 0; i < d; ++i) m(i, i) -= shift;
    }
    return {m, (grading(a, ctx) + grading(b, ctx)) % 2};
}

GradedMatrix generators(GenKind kind, int a, int b, const AlgebraContext& ctx) {
    switch (kind) {
        case GenKind::E: {
            if (a == b) throw std::invalid_argument("E generator needs a != b");
            GaussianRational half_i(Rational(0), Rational(1, 2));
            Mat m = (ehat(a, b, ctx).m - ehat(b, a, ctx).m) * half_i;
            return {m, (grading(a, ctx) + grading(b, ctx)) % 2};
        }
        case GenKind::F: {
            if (a == b) throw std::invalid_argument("F generator needs a != b");
            GaussianRational half(Rational(1, 2));
            Mat m = (ehat(a, b, ctx).m + ehat(b, a, ctx).m) * half;
            return {m, (grading(a, ctx) + grading(b, ctx)) % 2};
        }
        case GenKind::H: {
            int c = a;
            if (c < 1 || c > ctx.dim() - 1)
                throw std::invalid_argument("H generator needs 1 <= c <= M+N-1");
            Mat m = Mat::Zero(ctx.dim(), ctx.dim());
            for (int l = 1; l <= c; ++l)
                m += (ehat(l, l, ctx).m - ehat(l + 1, l + 1, ctx).m) * GaussianRational(l);
            return {m, 0};
        }
    }
    throw std::logic_error("unreachable");
}

GaussianRational supertrace(const Mat& x, const AlgebraContext& ctx) {
    GaussianRational acc;
    for (int i = 1; i <= ctx.dim(); ++i) {
        GaussianRational v = x(i - 1, i - 1);
        acc += (grading(i, ctx) == 0) ? v : -v;
    }
    return acc;
}

GradedMatrix super_bracket(const GradedMatrix& x, const GradedMatrix& y) {
    if (!x.grade || !y.grade) throw std::invalid_argument("super_bracket needs homogeneous inputs");
    Mat m = x.m * y.m;
    Mat n = y.m * x.m;
    if ((*x.grade * *y.grade) % 2 == 0)
        m -= n;
    else
        m += n;
    return {m, (*x.grade + *y.grade) % 2};
}

Mat commutation_rhs(int a, int b, int c, int d, const AlgebraContext& ctx) {
    int ga = grading(a, ctx), gb = grading(b, ctx);
    int gc = grading(c, ctx), gd = grading(d, ctx);
    Mat r = Mat::Zero(ctx.dim(), ctx.dim());
    if (b == c) r += ehat(a, d, ctx).m;
    if (d == a) {
        int s = sign_pow((ga + gb) * (gc + gd));
        r -= ehat(c, b, ctx).m * GaussianRational(s);
    }
    return r;
}

GaussianRational str2_closed(int a, int b, int c, int d, const AlgebraContext& ctx) {
    int ga = grading(a, ctx), gc = grading(c, ctx);
    Rational v(sign_pow(ga) * kron(a, d) * kron(b, c));
    v -= rat(sign_pow(ga + gc) * kron(a, b) * kron(c, d), ctx.mn());
    return GaussianRational(v);
}

GaussianRational str3_closed(int a, int b, int c, int d, int e, int f,
                             const AlgebraContext& ctx) {
    int ga = grading(a, ctx), gc = grading(c, ctx), ge = grading(e, ctx), gf = grading(f, ctx);
    long mn = ctx.mn();
    Rational v(sign_pow(ga) * kron(a, f) * kron(b, c) * kron(d, e));
    v -= rat(sign_pow(ga + gc) * kron(a, b) * kron(c, f) * kron(d, e), mn);
    v -= rat(sign_pow(gc + gf) * kron(c, d) * kron(a, f) * kron(b, e), mn);
    v -= rat(sign_pow(gf + ga) * kron(e, f) * kron(a, d) * kron(b, c), mn);
    v += rat(2 * sign_pow(ga + gc + ge) * kron(a, b) * kron(c, d) * kron(e, f), mn * mn);
    return GaussianRational(v);
}

GaussianRational fierz_lhs(int i, int j, int k, int l, const AlgebraContext& ctx) {
    GaussianRational acc;
    for (int a = 1; a <= ctx.dim(); ++a)
        for (int b = 1; b <= ctx.dim(); ++b) {
            GaussianRational v = ehat(a, b, ctx).m(i - 1, j - 1) * ehat(b, a, ctx).m(k - 1, l - 1);
            acc += (grading(b, ctx) == 0) ? v : -v;
        }
    return acc;
}

GaussianRational fierz_rhs(int i, int j, int k, int l, const AlgebraContext& ctx) {
    Rational v(sign_pow(grading(j, ctx)) * kron(i, l) * kron(j, k));
    v -= rat(kron(i, j) * kron(k, l), ctx.mn());
    return GaussianRational(v);
}

Mat casimir(const AlgebraContext& ctx) {
    int d = ctx.dim();
    Mat acc = Mat::Zero(d, d);
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            Mat p = ehat(a, b, ctx).m * ehat(b, a, ctx).m;
            if (grading(b, ctx) == 0)
                acc += p;
            else
                acc -= p;
        }
    return acc;
}

Rational casimir_value(const AlgebraContext& ctx) {
    long mn = ctx.mn();
    return rat(mn * mn - 1, 2 * mn);
}

}  // namespace sumn
