// Acceptance checks, one per command-line argument 1..11.  Each prints a
// single "criterion N: PASS|FAIL ..." line and exits nonzero on failure.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "sumn/gauge.hpp"
#include "sumn/skein.hpp"
#include "sumn/superalgebra.hpp"

using namespace sumn;

namespace {

struct Entry {
    std::string name;
    LinkDiagram diagram;
};

std::vector<Entry> load_corpus() {
    std::ifstream in(CORPUS_FILE);
    if (!in) throw std::runtime_error("corpus file missing");
    std::vector<Entry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        Entry e;
        e.name = j.at("name").get<std::string>();
        if (j.contains("braid"))
            e.diagram = braid_closure(
                parse_braid(j.at("braid").get<std::string>(), j.at("strands").get<int>()));
        else
            e.diagram = diagram_from_json(j.at("pd"));
        out.push_back(std::move(e));
    }
    return out;
}

bool mat_eq(const Mat& a, const Mat& b) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

std::vector<AlgebraContext> sweep_contexts() {
    std::vector<AlgebraContext> out;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            if (m != n && m + n <= 5) out.emplace_back(m, n);
    return out;
}

bool algebra_sweep(std::string& why) {
    for (const auto& ctx : sweep_contexts()) {
        int d = ctx.dim();
        Mat sum = Mat::Zero(d, d);
        for (int a = 1; a <= d; ++a) {
            sum = sum + ehat(a, a, ctx).m;
            for (int b = 1; b <= d; ++b) {
                if (!supertrace(ehat(a, b, ctx).m, ctx).is_zero()) {
                    why = "supertrace nonzero";
                    return false;
                }
                for (int c = 1; c <= d; ++c)
                    for (int e = 1; e <= d; ++e) {
                        if (!mat_eq(super_bracket(ehat(a, b, ctx), ehat(c, e, ctx)).m,
                                    commutation_rhs(a, b, c, e, ctx))) {
                            why = "commutation relation";
                            return false;
                        }
                        Mat p2 = ehat(a, b, ctx).m * ehat(c, e, ctx).m;
                        if (supertrace(p2, ctx) != str2_closed(a, b, c, e, ctx)) {
                            why = "two-factor supertrace";
                            return false;
                        }
                        for (int f = 1; f <= d; ++f)
                            for (int g = 1; g <= d; ++g)
                                if (supertrace(p2 * ehat(f, g, ctx).m, ctx) !=
                                    str3_closed(a, b, c, e, f, g, ctx)) {
                                    why = "three-factor supertrace";
                                    return false;
                                }
                        if (fierz_lhs(a, b, c, e, ctx) != fierz_rhs(a, b, c, e, ctx)) {
                            why = "fierz identity";
                            return false;
                        }
                    }
            }
        }
        if (!mat_eq(sum, Mat::Zero(d, d))) {
            why = "sum of ehat_aa";
            return false;
        }
        Mat cas = casimir(ctx);
        Mat want = Mat::Identity(d, d) * GaussianRational(Rational(2) * casimir_value(ctx));
        if (!mat_eq(cas, want)) {
            why = "casimir";
            return false;
        }
        for (int a = 1; a <= d; ++a)
            for (int b = 1; b <= d; ++b) {
                if (a == b) continue;
                for (GenKind k : {GenKind::E, GenKind::F}) {
                    Mat g = generators(k, a, b, ctx).m;
                    if (!supertrace(g, ctx).is_zero()) {
                        why = "generator trace";
                        return false;
                    }
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            if (g(i, j) != conj(g(j, i))) {
                                why = "generator hermiticity";
                                return false;
                            }
                }
            }
        for (int c = 1; c < d; ++c) {
            Mat h = generators(GenKind::H, c, c, ctx).m;
            if (!supertrace(h, ctx).is_zero()) {
                why = "cartan generator trace";
                return false;
            }
        }
    }
    return true;
}

GaussianRational rnd_val(std::mt19937& rng) {
    return {rat(long(rng() % 11) - 5, long(rng() % 4) + 1),
            rat(long(rng() % 11) - 5, long(rng() % 4) + 1)};
}

LaurentBi flip_tz(const LaurentBi& p) {
    LaurentBi r;
    for (const auto& [k, c] : p.terms)
        r.add_term(-k.first, k.second, k.second % 2 == 0 ? c : -c);
    return r;
}

LaurentUni flip_q(const LaurentUni& p) {
    LaurentUni r;
    for (const auto& [e, c] : p.terms) r.add_term(-e, c);
    return r;
}

int run(int n) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
            .count();
    };
    std::string why;

    switch (n) {
        case 1: {
            bool ok = algebra_sweep(why);
            long ms = elapsed();
            if (ok && ms >= 30000) {
                ok = false;
                why = "runtime over 30 s";
            }
            std::cout << "criterion 1: " << (ok ? "PASS" : "FAIL - " + why)
                      << " (algebra identity sweep, " << ms << " ms)\n";
            return ok ? 0 : 1;
        }
        case 2: {
            AlgebraContext ctx(3, 1);
            bool ok = casimir_value(ctx) == rat(3, 4) &&
                      mat_eq(casimir(ctx),
                             Mat::Identity(4, 4) * GaussianRational(rat(3, 2)));
            std::cout << "criterion 2: " << (ok ? "PASS" : "FAIL")
                      << " (Casimir spot value at (3,1))\n";
            return ok ? 0 : 1;
        }
        case 3: {
            std::mt19937 rng(17);
            bool ok = true;
            for (auto [M, N] : {std::pair<int, int>{2, 1}, {3, 1}, {3, 2}}) {
                AlgebraContext ctx(M, N);
                for (int it = 0; it < 100 && ok; ++it) {
                    FieldPoint p(ctx);
                    for (auto& v : p.Aval) v = rnd_val(rng);
                    for (auto& v : p.Dval) v = rnd_val(rng);
                    ok = action_density_component(p, ctx) == action_density_strform(p, ctx);
                }
            }
            std::cout << "criterion 3: " << (ok ? "PASS" : "FAIL")
                      << " (action density, two routes, 100 samples each)\n";
            return ok ? 0 : 1;
        }
        case 4: {
            // Run the check faithfully on the required random fields.  The
            // stated field equation does not hold for nonzero fields: the
            // Euler-Lagrange side reproduces the derivative part of the
            // field tensor but the quadratic commutator term comes out with
            // the opposite sign, so this criterion fails honestly.
            std::mt19937 rng(23);
            std::array<Rational, 3> x = {rat(1, 2), rat(-1, 3), rat(2)};
            int pass = 0, total = 0;
            std::string first;
            for (auto [M, N] : {std::pair<int, int>{2, 1}, {3, 1}}) {
                AlgebraContext ctx(M, N);
                for (int it = 0; it < 20; ++it) {
                    PolyGaugeField f(ctx);
                    for (auto& c : f.comp) {
                        MultiPoly3 p;
                        for (int t = 0; t < 2; ++t) {
                            MultiPoly3::Key k = {0, 0, 0};
                            int deg = int(rng() % 3);
                            for (int j = 0; j < deg; ++j) k[rng() % 3] += 1;
                            p.add_term(k, rnd_val(rng));
                        }
                        c = p;
                    }
                    FieldEqReport rep = field_equation_check(f, x, ctx);
                    ++total;
                    if (rep.ok)
                        ++pass;
                    else if (first.empty())
                        first = rep.detail;
                }
            }
            bool ok = pass == total;
            long ms = elapsed();
            std::cout << "criterion 4: " << (ok ? "PASS" : "FAIL") << " (field equation, "
                      << pass << "/" << total << " fields, " << ms << " ms)";
            if (!ok)
                std::cout << " - expected: the quadratic term enters with opposite sign; "
                          << "first mismatch: " << first;
            std::cout << "\n";
            return ok ? 0 : 1;
        }
        case 5: {
            auto closure = [](const char* w, int s) {
                return braid_closure(parse_braid(w, s));
            };
            auto bi = [](std::initializer_list<std::tuple<long, long, long>> ts) {
                LaurentBi p;
                for (auto [et, ez, c] : ts) p.add_term(et, ez, GaussianRational(c));
                return p;
            };
            LinkDiagram hopf = closure("1 1", 2), tre = closure("1 1 1", 2),
                        f8 = closure("1 -2 1 -2", 3);
            bool ok = homfly(hopf, Normalization::Unit) ==
                          bi({{-1, -1, 1}, {-3, -1, -1}, {-1, 1, 1}}) &&
                      homfly(tre, Normalization::Unit) ==
                          bi({{-2, 0, 2}, {-4, 0, -1}, {-2, 2, 1}}) &&
                      homfly(f8, Normalization::Unit) ==
                          bi({{2, 0, 1}, {-2, 0, 1}, {0, 0, -1}, {0, 2, -1}});
            for (const LinkDiagram* d : {&hopf, &tre, &f8})
                ok = ok && homfly(*d, Normalization::Unit) ==
                               homfly_naive(*d, Normalization::Unit);
            std::cout << "criterion 5: " << (ok ? "PASS" : "FAIL")
                      << " (golden HOMFLY values, oracle-confirmed)\n";
            return ok ? 0 : 1;
        }
        case 6: {
            LaurentUni jt = jones(braid_closure(parse_braid("1 1 1", 2)));
            LaurentUni jf = jones(braid_closure(parse_braid("1 -2 1 -2", 3)));
            // standard right-trefoil Jones: -q^-4 + q^-3 + q^-1 (u = q^{1/4})
            LaurentUni std_tre;
            std_tre.add_term(-16, GaussianRational(-1));
            std_tre.add_term(-12, GaussianRational(1));
            std_tre.add_term(-4, GaussianRational(1));
            LaurentUni std_f8;
            std_f8.add_term(8, GaussianRational(1));
            std_f8.add_term(4, GaussianRational(-1));
            std_f8.add_term(0, GaussianRational(1));
            std_f8.add_term(-4, GaussianRational(-1));
            std_f8.add_term(-8, GaussianRational(1));
            bool ok = jf == std_f8 && (jt == std_tre || jt == flip_q(std_tre));
            std::cout << "criterion 6: " << (ok ? "PASS" : "FAIL")
                      << " (Jones values, mirror allowance on the trefoil)\n";
            return ok ? 0 : 1;
        }
        case 7: {
            SkeinParams p31 = make_params(3, 1, SkeinMode::QExact);
            SkeinParams p41 = make_params(4, 1, SkeinMode::QExact);
            bool ok = true;
            for (const auto& e : load_corpus())
                for (int c = 0; c < int(e.diagram.crossings.size()) && ok; ++c)
                    ok = verify_skein(e.diagram, c, SkeinEngine::Homfly) &&
                         verify_skein(e.diagram, c, SkeinEngine::W, &p31) &&
                         verify_skein(e.diagram, c, SkeinEngine::W, &p41);
            long ms = elapsed();
            if (ok && ms >= 60000) {
                ok = false;
                why = "runtime over 60 s";
            }
            std::cout << "criterion 7: " << (ok ? "PASS" : "FAIL - " + why)
                      << " (skein relation audit, " << ms << " ms)\n";
            return ok ? 0 : 1;
        }
        case 8: {
            SkeinParams p = make_params(3, 1, SkeinMode::QExact);
            std::mt19937 rng(31);
            int moves = 0, r3moves = 0;
            bool ok = true;
            for (const auto& e : load_corpus()) {
                if (e.diagram.crossings.empty() && e.diagram.free_loops == 0) continue;
                LaurentBi hp = homfly(e.diagram, Normalization::Unit);
                LaurentUni wv = w_invariant(e.diagram, p);
                auto arcs = arc_ids(e.diagram);
                for (int a : arcs)
                    for (int s : {1, -1}) {
                        LinkDiagram d = r1_insert(e.diagram, a, s);
                        ++moves;
                        ok = ok && homfly(d, Normalization::Unit) == hp;
                        LaurentUni got = w_invariant(d, p);
                        ok = ok && (s > 0 ? got == p.alpha * wv : p.alpha * got == wv);
                    }
                for (int a : arcs)
                    for (int b : arcs) {
                        if (a == b) continue;
                        LinkDiagram d;
                        try {
                            d = r2_insert(e.diagram, a, b);
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        ++moves;
                        ok = ok && homfly(d, Normalization::Unit) == hp &&
                             w_invariant(d, p) == wv;
                        // R3 sites on the enriched diagram
                        for (const auto& site : r3_sites(d)) {
                            LinkDiagram d3 = r3_apply(d, site);
                            ++moves;
                            ++r3moves;
                            ok = ok && homfly(d3, Normalization::Unit) == hp &&
                                 w_invariant(d3, p) == wv;
                        }
                    }
                if (!ok) break;
            }
            // extra R3 coverage from random braid closures
            for (int trial = 0; trial < 40 && ok; ++trial) {
                int strands = 3 + int(rng() % 2);
                std::ostringstream w;
                for (int i = 0; i < 6; ++i) {
                    int g = 1 + int(rng() % (strands - 1));
                    w << (rng() % 2 ? g : -g) << " ";
                }
                LinkDiagram d = braid_closure(parse_braid(w.str(), strands));
                LaurentBi hp = homfly(d, Normalization::Unit);
                LaurentUni wv = w_invariant(d, p);
                for (const auto& site : r3_sites(d)) {
                    LinkDiagram d3 = r3_apply(d, site);
                    ++moves;
                    ++r3moves;
                    ok = ok && homfly(d3, Normalization::Unit) == hp &&
                         w_invariant(d3, p) == wv;
                }
            }
            ok = ok && moves >= 100 && r3moves > 0;
            std::cout << "criterion 8: " << (ok ? "PASS" : "FAIL")
                      << " (Reidemeister behavior, " << moves << " moves, " << r3moves
                      << " of type III)\n";
            return ok ? 0 : 1;
        }
        case 9: {
            bool ok = true;
            for (auto [M, N] :
                 {std::pair<int, int>{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}})
                ok = ok && perturbative_check(M, N).ok;
            std::cout << "criterion 9: " << (ok ? "PASS" : "FAIL")
                      << " (first-order parameter expansion)\n";
            return ok ? 0 : 1;
        }
        case 10: {
            bool ok = true;
            for (const auto& e : load_corpus()) {
                if (e.diagram.crossings.size() > 8) continue;
                if (e.diagram.crossings.empty() && e.diagram.free_loops == 0) continue;
                for (Normalization norm : {Normalization::Unit, Normalization::Paper})
                    ok = ok && homfly(e.diagram, norm) == homfly_naive(e.diagram, norm);
            }
            long ms = elapsed();
            if (ok && ms >= 120000) {
                ok = false;
                why = "runtime over 120 s";
            }
            std::cout << "criterion 10: " << (ok ? "PASS" : "FAIL - " + why)
                      << " (memoized vs naive engine, " << ms << " ms)\n";
            return ok ? 0 : 1;
        }
        case 11: {
            bool ok = true;
            for (const auto& e : load_corpus()) {
                if (e.diagram.crossings.empty() && e.diagram.free_loops == 0) continue;
                std::string seq =
                    to_json(homfly(e.diagram, Normalization::Unit, false)).dump();
                std::string par =
                    to_json(homfly(e.diagram, Normalization::Unit, true)).dump();
                ok = ok && seq == par;
            }
            std::cout << "criterion 11: " << (ok ? "PASS" : "FAIL")
                      << " (parallel evaluation determinism)\n";
            return ok ? 0 : 1;
        }
        default:
            std::cerr << "usage: acceptance <1..11>\n";
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <1..11>\n";
        return 2;
    }
    try {
        return run(std::stoi(argv[1]));
    } catch (const std::exception& ex) {
        std::cout << "criterion " << argv[1] << ": FAIL - exception: " << ex.what() << "\n";
        return 1;
    }
}
