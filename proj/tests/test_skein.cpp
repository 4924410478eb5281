#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "sumn/skein.hpp"

using namespace sumn;

namespace {

LinkDiagram closure(const std::string& word, int strands) {
    return braid_closure(parse_braid(word, strands));
}

struct Named {
    const char* name;
    const char* word;
    int strands;
};

const std::vector<Named> corpus = {
    {"unknot", "", 1},         {"hopf_plus", "1 1", 2},
    {"hopf_minus", "-1 -1", 2}, {"trefoil", "1 1 1", 2},
    {"trefoil_mirror", "-1 -1 -1", 2}, {"figure_eight", "1 -2 1 -2", 3},
};

LaurentBi bi(std::initializer_list<std::tuple<long, long, long>> ts) {
    LaurentBi p;
    for (auto [et, ez, c] : ts) p.add_term(et, ez, GaussianRational(c));
    return p;
}

LaurentUni uni(std::initializer_list<std::pair<long, long>> ts) {
    LaurentUni p;
    for (auto [e, c] : ts) p.add_term(e, GaussianRational(c));
    return p;
}

// swap t -> t^-1, z -> -z
LaurentBi mirror_image(const LaurentBi& p) {
    LaurentBi r;
    for (const auto& [k, c] : p.terms)
        r.add_term(-k.first, k.second,
                   k.second % 2 == 0 ? c : -c);
    return r;
}

int leaves(const SkeinTreeNode& n) {
    if (n.bad < 0) return 1;
    return leaves(*n.switched) + leaves(*n.smoothed);
}

}  // namespace

TEST_CASE("golden homfly values, unit normalization") {
    CHECK(homfly(closure("", 1), Normalization::Unit) ==
          LaurentBi::constant(GaussianRational(1)));
    CHECK(homfly(closure("1 1", 2), Normalization::Unit) ==
          bi({{-1, -1, 1}, {-3, -1, -1}, {-1, 1, 1}}));
    CHECK(homfly(closure("1 1 1", 2), Normalization::Unit) ==
          bi({{-2, 0, 2}, {-4, 0, -1}, {-2, 2, 1}}));
    CHECK(homfly(closure("1 -2 1 -2", 3), Normalization::Unit) ==
          bi({{2, 0, 1}, {-2, 0, 1}, {0, 0, -1}, {0, 2, -1}}));
    // paper normalization multiplies by delta = (t - t^-1)/z
    LaurentBi delta = bi({{1, -1, 1}, {-1, -1, -1}});
    CHECK(homfly(closure("", 1), Normalization::Paper) == delta);
    CHECK_THROWS_AS(homfly(LinkDiagram{}, Normalization::Unit), std::invalid_argument);
}

TEST_CASE("homfly is invariant under curls and canceling pairs") {
    LaurentBi one = LaurentBi::constant(GaussianRational(1));
    CHECK(homfly(closure("1", 2), Normalization::Unit) == one);
    CHECK(homfly(closure("-1", 2), Normalization::Unit) == one);
    CHECK(homfly(closure("1 -1", 2), Normalization::Unit) ==
          bi({{1, -1, 1}, {-1, -1, -1}}));  // two-component unlink = delta
}

TEST_CASE("naive oracle agrees with the memoized engine") {
    for (const auto& e : corpus) {
        LinkDiagram d = closure(e.word, e.strands);
        for (Normalization n : {Normalization::Unit, Normalization::Paper})
            CHECK(homfly(d, n) == homfly_naive(d, n));
    }
    for (const char* w : {"1 1 1 1 1", "1 -2 1 -2 1 -2", "1 1 -2 -2", "1 2 1 2"}) {
        LinkDiagram d = closure(w, std::string(w).find('2') != std::string::npos ? 3 : 2);
        CHECK(homfly(d, Normalization::Unit) == homfly_naive(d, Normalization::Unit));
    }
}

TEST_CASE("mirror law") {
    for (const auto& e : corpus) {
        LinkDiagram d = closure(e.word, e.strands);
        CHECK(homfly(mirror(d), Normalization::Unit) ==
              mirror_image(homfly(d, Normalization::Unit)));
    }
    // figure-eight is amphichiral
    LaurentBi f8 = homfly(closure("1 -2 1 -2", 3), Normalization::Unit);
    CHECK(f8 == mirror_image(f8));
}

TEST_CASE("jones specialization") {
    CHECK(jones(closure("", 1)) == uni({{0, 1}}));
    // right trefoil: q^-1 + q^-3 - q^-4 in u = q^{1/4}
    CHECK(jones(closure("1 1 1", 2)) == uni({{-4, 1}, {-12, 1}, {-16, -1}}));
    // figure-eight: q^2 - q + 1 - q^-1 + q^-2
    CHECK(jones(closure("1 -2 1 -2", 3)) ==
          uni({{8, 1}, {4, -1}, {0, 1}, {-4, -1}, {-8, 1}}));
    // chiralities are related by q <-> q^-1
    LaurentUni jm = jones(closure("-1 -1 -1", 2));
    LaurentUni flipped;
    for (const auto& [e, c] : jm.terms) flipped.add_term(-e, c);
    CHECK(flipped == jones(closure("1 1 1", 2)));
    CHECK(jones(closure("1 1 1", 2)) == specialize(homfly(closure("1 1 1", 2), Normalization::Unit), 2));
}

TEST_CASE("make_params q-exact spot values") {
    SkeinParams p31 = make_params(3, 1, SkeinMode::QExact);
    CHECK(p31.alpha == uni({{3, 1}}));
    CHECK(p31.beta == uni({{1, 1}}));
    CHECK(p31.z == uni({{2, 1}, {-2, -1}}));
    CHECK(p31.t == uni({{4, 1}}));
    CHECK(p31.delta == uni({{2, 1}, {-2, 1}}));

    SkeinParams p21 = make_params(2, 1, SkeinMode::QExact);
    CHECK(p21.alpha == uni({{0, 1}}));  // C2 = 0
    CHECK(p21.beta == uni({{1, 1}}));
    CHECK(p21.t == uni({{1, 1}}));
    CHECK(p21.delta == uni({{0, 1}}));

    CHECK_THROWS_AS(make_params(2, 2, SkeinMode::QExact), std::invalid_argument);
}

TEST_CASE("exact parameter identities") {
    for (auto [M, N] : {std::pair<int, int>{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        SkeinParams p = make_params(M, N, SkeinMode::QExact);
        CHECK(p.t == p.alpha * p.beta);
        LaurentUni ab = p.alpha * p.beta;
        LaurentUni abinv = exact_div(LaurentUni::constant(GaussianRational(1)), ab);
        CHECK(ab - abinv == p.z * p.delta);
    }
}

TEST_CASE("make_params paper-literal series") {
    SkeinParams p = make_params(3, 1, SkeinMode::PaperLiteral, 1);
    GaussianRational i = GaussianRational::i();
    CHECK(p.alpha_s.c[1] == -i * GaussianRational(rat(3, 4)));
    CHECK(p.beta_s.c[1] == -i * GaussianRational(rat(1, 4)));
    CHECK(p.z_s.c[0].is_zero());
    CHECK(p.z_s.c[1] == -i);
    CHECK(p.t_s.c[1] == -i);
    CHECK(p.delta_s.c[0] == GaussianRational(2));
}

TEST_CASE("w invariant spot values at (3,1)") {
    SkeinParams p = make_params(3, 1, SkeinMode::QExact);
    CHECK(w_invariant(closure("", 1), p) == uni({{2, 1}, {-2, 1}}));  // delta
    // one positive curl: alpha * delta = u^3 (u^2 + u^-2)
    CHECK(w_invariant(closure("1", 2), p) == uni({{5, 1}, {1, 1}}));
    CHECK(w_invariant(closure("-1", 2), p) == uni({{-1, 1}, {-5, 1}}));
    // two-component unlink: delta^2
    CHECK(w_invariant(closure("", 2), p) == uni({{4, 1}, {0, 2}, {-4, 1}}));
}

TEST_CASE("w equals the writhe-corrected specialization") {
    for (auto [M, N] : {std::pair<int, int>{3, 1}, {4, 1}}) {
        SkeinParams p = make_params(M, N, SkeinMode::QExact);
        for (const auto& e : corpus) {
            LinkDiagram d = closure(e.word, e.strands);
            LaurentUni spec = specialize(homfly(d, Normalization::Paper), p.mn);
            int w = writhe(d);
            LaurentUni aw = w >= 0 ? pow(p.alpha, w)
                                   : exact_div(LaurentUni::constant(GaussianRational(1)),
                                               pow(p.alpha, -w));
            CHECK(w_invariant(d, p) == aw * spec);
        }
    }
    SkeinParams lit = make_params(3, 1, SkeinMode::PaperLiteral);
    CHECK_THROWS_AS(w_invariant(closure("", 1), lit), std::invalid_argument);
}

TEST_CASE("w transforms by alpha under curls and is r2/r3 invariant") {
    SkeinParams p = make_params(3, 1, SkeinMode::QExact);
    LinkDiagram d = closure("1 1 1", 2);
    LaurentUni base = w_invariant(d, p);
    for (int a : arc_ids(d)) {
        CHECK(w_invariant(r1_insert(d, a, 1), p) == p.alpha * base);
        LaurentUni wm = w_invariant(r1_insert(d, a, -1), p);
        CHECK(p.alpha * wm == base);
        for (int b : arc_ids(d)) {
            if (a == b) continue;
            LinkDiagram d2;
            try {
                d2 = r2_insert(d, a, b);
            } catch (const std::invalid_argument&) {
                continue;
            }
            CHECK(w_invariant(d2, p) == base);
        }
    }
    LinkDiagram t = closure("1 2 1 3 2", 4);
    LaurentUni tb = w_invariant(t, p);
    for (const auto& s : r3_sites(t)) CHECK(w_invariant(r3_apply(t, s), p) == tb);
}

TEST_CASE("skein relation verified at every corpus crossing") {
    SkeinParams p31 = make_params(3, 1, SkeinMode::QExact);
    SkeinParams p41 = make_params(4, 1, SkeinMode::QExact);
    for (const auto& e : corpus) {
        LinkDiagram d = closure(e.word, e.strands);
        for (int c = 0; c < int(d.crossings.size()); ++c) {
            CHECK(verify_skein(d, c, SkeinEngine::Homfly));
            CHECK(verify_skein(d, c, SkeinEngine::W, &p31));
            CHECK(verify_skein(d, c, SkeinEngine::W, &p41));
        }
    }
    LinkDiagram tre = closure("1 1 1", 2);
    CHECK_THROWS_AS(verify_skein(tre, 3, SkeinEngine::Homfly), std::invalid_argument);
    CHECK_THROWS_AS(verify_skein(tre, 0, SkeinEngine::W, nullptr), std::invalid_argument);
}

TEST_CASE("perturbative checks across (M,N)") {
    for (auto [M, N] : {std::pair<int, int>{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        PerturbReport rep = perturbative_check(M, N);
        CHECK(rep.ok);
        for (const auto& c : rep.checks) CHECK(c.at("ok").get<bool>());
    }
    // alpha coefficient for (3,1) is -(3/4) i, t coefficient for (4,1) is -(3/2) i
    PerturbReport r31 = perturbative_check(3, 1);
    CHECK(r31.checks[0].at("actual")[1] == "0-3/4*i");
    PerturbReport r41 = perturbative_check(4, 1);
    CHECK(r41.checks[3].at("actual")[1] == "0-3/2*i");
}

TEST_CASE("skein tree shapes") {
    CHECK(leaves(skein_tree(closure("", 1))) == 1);
    SkeinTreeNode hopf = skein_tree(closure("1 1", 2));
    CHECK(leaves(hopf) == 2);
    CHECK(hopf.bad >= 0);
    CHECK(leaves(skein_tree(closure("1 1 1", 2))) == 3);
    json j = tree_to_json(hopf);
    CHECK(j.contains("bad"));
    CHECK(j["switched"].contains("leaf"));
}

TEST_CASE("ceilings raise CeilingExceeded") {
    std::ostringstream w;
    for (int i = 0; i < 15; ++i) w << "1 ";
    LinkDiagram big = closure(w.str(), 2);
    CHECK_THROWS_AS(homfly(big, Normalization::Unit), CeilingExceeded);
    CHECK_THROWS_AS(skein_tree(closure("1 1 1 1 1 1 1 1 1 1 1", 2)), CeilingExceeded);
    // raised ceiling admits the same diagram
    CHECK(homfly(big, Normalization::Unit, false, 15) ==
          homfly_naive(big, Normalization::Unit, 15));
}

TEST_CASE("parallel evaluation is byte-identical to sequential") {
    for (const auto& e : corpus) {
        LinkDiagram d = closure(e.word, e.strands);
        LaurentBi seq = homfly(d, Normalization::Unit, false);
        LaurentBi par = homfly(d, Normalization::Unit, true);
        CHECK(to_json(seq).dump() == to_json(par).dump());
    }
    LinkDiagram d8 = closure("1 -2 1 -2 1 -2 1 -2", 3);
    CHECK(to_json(homfly(d8, Normalization::Unit, true)).dump() ==
          to_json(homfly(d8, Normalization::Unit, false)).dump());
}
