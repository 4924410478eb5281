#include "sumn/gauge.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace sumn {

namespace {

constexpr int kEps3[6][4] = {
    // mu, nu, rho, sign
    {0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1},
};

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

using AProv = std::function<SuperPoly(int, int, int)>;
using DProv = std::function<SuperPoly(int, int, int, int)>;

// Component form of the action density, common to the numeric and the
// fully symbolic use.
SuperPoly density_component_generic(const AProv& A, const DProv& D, const AlgebraContext& ctx) {
    int d = ctx.dim();
    long mn = ctx.mn();
    SuperPoly tot;
    for (const auto& e : kEps3) {
        int mu = e[0], nu = e[1], rho = e[2], s = e[3];
        for (int a = 1; a <= d; ++a) {
            int ga = grading(a, ctx);
            for (int b = 1; b <= d; ++b) {
                int gb = grading(b, ctx);
                tot = tot + A(mu, a, b) * D(nu, rho, b, a) *
                                GaussianRational(Rational(s * sign_pow(gb)));
                tot = tot - A(mu, a, a) * D(nu, rho, b, b) *
                                GaussianRational(rat(s * sign_pow(gb + ga), mn));
                for (int c = 1; c <= d; ++c) {
                    int gc = grading(c, ctx);
                    int tw = sign_pow(gc + ga * gb + gb * gc + gc * ga);
                    tot = tot + A(mu, a, b) * A(nu, b, c) * A(rho, c, a) *
                                    GaussianRational(rat(2 * s * sign_pow(gb) * tw, 3));
                    tot = tot - A(mu, a, a) * A(nu, c, b) * A(rho, b, c) *
                                    GaussianRational(rat(2 * s * sign_pow(gb + ga), 3 * mn));
                    tot = tot + A(mu, a, a) * A(nu, b, b) * A(rho, c, c) *
                                    GaussianRational(rat(4 * s * sign_pow(gb + ga + gc),
                                                         3 * mn * mn));
                }
            }
        }
    }
    return tot;
}

SuperPoly val_component(const GaussianRational& v, int parity, int gen) {
    if (parity == 0) return SuperPoly::constant(v);
    return SuperPoly::odd_sym(gen) * v;
}

AProv valued_a(const FieldPoint& p, const AlgebraContext& ctx) {
    GaugeSymbols sy(ctx);
    return [&p, sy, &ctx](int mu, int a, int b) {
        int parity = (grading(a, ctx) + grading(b, ctx)) % 2;
        return val_component(p.a(mu, a, b), parity, sy.A(mu, a, b));
    };
}

DProv valued_d(const FieldPoint& p, const AlgebraContext& ctx) {
    GaugeSymbols sy(ctx);
    bool tie = p.tie_derivative_generators;
    return [&p, sy, &ctx, tie](int nu, int rho, int a, int b) {
        int parity = (grading(a, ctx) + grading(b, ctx)) % 2;
        int gen = tie ? sy.A(rho, a, b) : sy.D(nu, rho, a, b);
        return val_component(p.dv(nu, rho, a, b), parity, gen);
    };
}

SuperPoly str_smat(const SMat& m, const AlgebraContext& ctx) {
    SuperPoly acc;
    for (int i = 1; i <= ctx.dim(); ++i) {
        if (grading(i, ctx) == 0)
            acc = acc + m[i - 1][i - 1];
        else
            acc = acc - m[i - 1][i - 1];
    }
    return acc;
}

SMat a_matrix(const AProv& A, int mu, const AlgebraContext& ctx) {
    return contract_ehat([&](int a, int b) { return A(mu, a, b); }, ctx);
}

}  // namespace

Rational ehat_entry(int a, int b, int i, int j, const AlgebraContext& ctx) {
    Rational v(a == i && b == j ? 1 : 0);
    if (a == b && i == j) v -= rat(sign_pow(grading(a, ctx)), ctx.mn());
    return v;
}

SMat contract_ehat(const std::function<SuperPoly(int, int)>& comp, const AlgebraContext& ctx) {
    int d = ctx.dim();
    SMat m = smat_zero(d);
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            SuperPoly c = comp(a, b);
            if (c.is_zero()) continue;
            // ehat_ab has an off-diagonal unit entry plus, on the diagonal,
            // an identity shift when a == b
            m[a - 1][b - 1] = m[a - 1][b - 1] + c;
            if (a == b) {
                GaussianRational shift(rat(sign_pow(grading(a, ctx)), ctx.mn()));
                for (int i = 0; i < d; ++i) m[i][i] = m[i][i] - c * shift;
            }
        }
    return m;
}

SuperPoly field_strength_component(const FieldPoint& p, int mu, int nu, int a, int b,
                                   const AlgebraContext& ctx) {
    auto A = valued_a(p, ctx);
    auto D = valued_d(p, ctx);
    int ga = grading(a, ctx), gb = grading(b, ctx);
    SuperPoly v = D(mu, nu, a, b) - D(nu, mu, a, b);
    for (int c = 1; c <= ctx.dim(); ++c) {
        int gc = grading(c, ctx);
        GaussianRational s(Rational(sign_pow((ga + gc) * (gc + gb))));
        v = v - (A(mu, a, c) * A(nu, c, b) - A(nu, a, c) * A(mu, c, b)) * s;
    }
    return v;
}

SMat field_strength_matrix(const FieldPoint& p, int mu, int nu, const AlgebraContext& ctx) {
    auto A = valued_a(p, ctx);
    auto D = valued_d(p, ctx);
    SMat am = a_matrix(A, mu, ctx);
    SMat an = a_matrix(A, nu, ctx);
    SMat dmn = contract_ehat([&](int a, int b) { return D(mu, nu, a, b); }, ctx);
    SMat dnm = contract_ehat([&](int a, int b) { return D(nu, mu, a, b); }, ctx);
    return smat_sub(smat_sub(dmn, dnm), smat_sub(envelope_mul(am, an), envelope_mul(an, am)));
}

SuperPoly action_density_component(const FieldPoint& p, const AlgebraContext& ctx) {
    return density_component_generic(valued_a(p, ctx), valued_d(p, ctx), ctx);
}

SuperPoly action_density_strform(const FieldPoint& p, const AlgebraContext& ctx) {
    auto A = valued_a(p, ctx);
    auto D = valued_d(p, ctx);
    SMat am[3] = {a_matrix(A, 0, ctx), a_matrix(A, 1, ctx), a_matrix(A, 2, ctx)};
    SuperPoly tot;
    GaussianRational two_thirds(rat(2, 3));
    for (const auto& e : kEps3) {
        int mu = e[0], nu = e[1], rho = e[2], s = e[3];
        SMat dm = contract_ehat([&](int a, int b) { return D(nu, rho, a, b); }, ctx);
        SuperPoly kin = str_smat(envelope_mul(am[mu], dm), ctx);
        SuperPoly cub = str_smat(envelope_mul(envelope_mul(am[mu], am[nu]), am[rho]), ctx);
        tot = tot + (kin + cub * two_thirds) * GaussianRational(Rational(s));
    }
    return tot;
}

FieldPoint eval_field(const PolyGaugeField& f, const std::array<Rational, 3>& x,
                      const AlgebraContext& ctx) {
    FieldPoint p(ctx);
    p.tie_derivative_generators = true;
    for (int mu = 0; mu < 3; ++mu)
        for (int a = 1; a <= ctx.dim(); ++a)
            for (int b = 1; b <= ctx.dim(); ++b) {
                p.a(mu, a, b) = f.at(mu, a, b).eval(x);
                for (int nu = 0; nu < 3; ++nu)
                    p.dv(nu, mu, a, b) = f.at(mu, a, b).diff(nu).eval(x);
            }
    return p;
}

namespace {

// Euler-Lagrange expressions of the symbolic density, cached per (M,N).
struct ElTable {
    std::vector<SuperPoly> el;  // index (rho, a, b)
};

const ElTable& el_table(const AlgebraContext& ctx) {
    static std::map<std::pair<int, int>, ElTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(ctx.M, ctx.N);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int d = ctx.dim();
    GaugeSymbols sy(ctx);
    auto parity = [&](int a, int b) { return (grading(a, ctx) + grading(b, ctx)) % 2; };
    auto sym = [&](int id, int par) {
        return par ? SuperPoly::odd_sym(id) : SuperPoly::even_sym(id);
    };
    AProv aprov = [&](int mu, int a, int b) { return sym(sy.A(mu, a, b), parity(a, b)); };
    DProv dprov = [&](int nu, int rho, int a, int b) {
        return sym(sy.D(nu, rho, a, b), parity(a, b));
    };
    SuperPoly L = density_component_generic(aprov, dprov, ctx);

    // chain rule for d/dx^nu applied to an expression in the A symbols:
    // each A_mu^{ab} contributes its derivative symbol D_{nu mu}^{ab}
    auto dx = [&](const SuperPoly& expr, int nu) {
        std::set<int> syms;
        for (const auto& [k, c] : expr.terms) {
            for (int s : k.first) syms.insert(s);
            for (int s : k.second) syms.insert(s);
        }
        SuperPoly out;
        for (int s : syms) {
            if (s >= 3 * d * d) continue;  // derivative symbols are constants here
            int mu = s / (d * d), rem = s % (d * d);
            int a = rem / d + 1, b = rem % d + 1;
            int par = parity(a, b);
            out = out + expr.lderiv(s, par != 0) * sym(sy.D(nu, mu, a, b), par);
        }
        return out;
    };

    ElTable tbl;
    tbl.el.resize(3 * d * d);
    for (int rho = 0; rho < 3; ++rho)
        for (int a = 1; a <= d; ++a)
            for (int b = 1; b <= d; ++b) {
                int par = parity(a, b);
                SuperPoly v = L.lderiv(sy.A(rho, a, b), par != 0);
                for (int nu = 0; nu < 3; ++nu)
                    v = v - dx(L.lderiv(sy.D(nu, rho, a, b), par != 0), nu);
                tbl.el[(rho * d + a - 1) * d + b - 1] = v;
            }
    auto [pos, inserted] = cache.emplace(key, std::move(tbl));
    return pos->second;
}

}  // namespace

std::string superpoly_str(const SuperPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        for (int s : k.first) os << "*x" << s;
        for (int s : k.second) os << "*th" << s;
    }
    return os.str();
}

FieldEqReport field_equation_check(const PolyGaugeField& f, const std::array<Rational, 3>& x,
                                   const AlgebraContext& ctx) {
    int d = ctx.dim();
    for (const auto& c : f.comp)
        if (c.degree() > 2) throw std::invalid_argument("field degree must be <= 2");

    GaugeSymbols sy(ctx);
    FieldPoint p = eval_field(f, x, ctx);
    const ElTable& tbl = el_table(ctx);

    // substitution: even symbols become numbers, odd symbols become the
    // value times the generator of the underlying field component
    std::map<int, SuperPoly::Subst> even_map, odd_map;
    for (int mu = 0; mu < 3; ++mu)
        for (int a = 1; a <= d; ++a)
            for (int b = 1; b <= d; ++b) {
                int par = (grading(a, ctx) + grading(b, ctx)) % 2;
                if (par == 0) {
                    even_map[sy.A(mu, a, b)] = {p.a(mu, a, b), std::nullopt};
                    for (int nu = 0; nu < 3; ++nu)
                        even_map[sy.D(nu, mu, a, b)] = {p.dv(nu, mu, a, b), std::nullopt};
                } else {
                    odd_map[sy.A(mu, a, b)] = {p.a(mu, a, b), sy.A(mu, a, b)};
                    for (int nu = 0; nu < 3; ++nu)
                        odd_map[sy.D(nu, mu, a, b)] = {p.dv(nu, mu, a, b), sy.A(mu, a, b)};
                }
            }

    GaussianRational half(Rational(1, 2));
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu) {
            if (mu == nu) continue;
            SMat lhs = contract_ehat(
                [&](int i, int j) {
                    // coefficient of ehat_{ij} corresponds to EL index (a,b) = (j,i)
                    int a = j, b = i;
                    SuperPoly acc;
                    for (const auto& e : kEps3) {
                        if (e[0] != mu || e[1] != nu) continue;
                        int rho = e[2], s = e[3];
                        GaussianRational coef =
                            half * GaussianRational(Rational(s * sign_pow(grading(b, ctx))));
                        acc = acc + tbl.el[(rho * d + a - 1) * d + b - 1] * coef;
                    }
                    return acc.substitute(even_map, odd_map);
                },
                ctx);
            SMat rhs = contract_ehat(
                [&](int i, int j) { return field_strength_component(p, mu, nu, j, i, ctx); },
                ctx);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (lhs[i][j] != rhs[i][j]) {
                        FieldEqReport rep;
                        rep.ok = false;
                        std::ostringstream os;
                        os << "mismatch at mu=" << mu << " nu=" << nu << " entry (" << i << ","
                           << j << "): lhs=" << superpoly_str(lhs[i][j])
                           << " rhs=" << superpoly_str(rhs[i][j]);
                        rep.detail = os.str();
                        return rep;
                    }
        }
    return {};
}

}  // namespace sumn
