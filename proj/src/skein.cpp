#include "sumn/skein.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <set>

namespace sumn {

namespace {

// (t - t^-1)/z, the paper-normalized unknot value in the bivariate ring
LaurentBi delta_bi() {
    LaurentBi d;
    d.add_term(1, -1, GaussianRational(1));
    d.add_term(-1, -1, GaussianRational(-1));
    return d;
}

LaurentBi bi_pow(const LaurentBi& p, int n) {
    LaurentBi r = LaurentBi::constant(GaussianRational(1));
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

struct Strands {
    std::map<int, int> next;                    // arc -> arc along the strand
    std::map<int, std::pair<int, bool>> cons;   // arc -> (crossing, entered under)
    std::vector<int> bases;                     // one base arc per cycle
};

Strands strands(const LinkDiagram& d, bool naive) {
    Strands s;
    for (int i = 0; i < int(d.crossings.size()); ++i) {
        const Crossing& c = d.crossings[i];
        s.next[c.ui] = c.uo;
        s.cons[c.ui] = {i, true};
        s.next[c.oi] = c.oo;
        s.cons[c.oi] = {i, false};
    }
    std::set<int> visited;
    for (const auto& [a, b] : s.next) {
        (void)b;
        if (visited.count(a)) continue;
        int base = a, x = a;
        do {
            visited.insert(x);
            base = naive ? std::max(base, x) : std::min(base, x);
            x = s.next.at(x);
        } while (x != a);
        s.bases.push_back(base);
    }
    if (naive)
        std::sort(s.bases.rbegin(), s.bases.rend());
    else
        std::sort(s.bases.begin(), s.bases.end());
    return s;
}

// First crossing met on its under strand when traversing from the base
// points in order; -1 when the diagram is descending.
int first_bad(const LinkDiagram& d, bool naive) {
    Strands s = strands(d, naive);
    std::set<int> seen;
    for (int base : s.bases) {
        int a = base;
        do {
            auto [ci, under] = s.cons.at(a);
            if (!seen.count(ci)) {
                if (under) return ci;
                seen.insert(ci);
            }
            a = s.next.at(a);
        } while (a != base);
    }
    return -1;
}

struct Memo {
    std::map<std::string, LaurentBi> map;
    std::mutex mx;
};

// Unit-normalized recursion: P(unknot) = 1, free loops factor out as delta.
LaurentBi rec_unit(const LinkDiagram& d, Memo* memo, bool naive, bool parallel);

LaurentBi core_unit(const LinkDiagram& core, Memo* memo, bool naive, bool parallel) {
    std::string key;
    if (memo) {
        key = canonical_key(core);
        std::lock_guard<std::mutex> lock(memo->mx);
        auto it = memo->map.find(key);
        if (it != memo->map.end()) return it->second;
    }
    LaurentBi val;
    int bad = first_bad(core, naive);
    if (bad < 0) {
        val = bi_pow(delta_bi(), component_count(core) - 1);
    } else {
        int sign = core.crossings[bad].sign;
        LinkDiagram sw = switch_crossing(core, bad);
        LinkDiagram sm = smooth_crossing(core, bad);
        LaurentBi a, b;
        if (parallel && int(core.crossings.size()) >= 6) {
            auto fa = std::async(std::launch::async,
                                 [&] { return rec_unit(sw, memo, naive, parallel); });
            b = rec_unit(sm, memo, naive, parallel);
            a = fa.get();
        } else {
            a = rec_unit(sw, memo, naive, parallel);
            b = rec_unit(sm, memo, naive, parallel);
        }
        if (sign > 0)  // P+ = t^-2 P- + t^-1 z P0
            val = LaurentBi::tz(-2, 0) * a + LaurentBi::tz(-1, 1) * b;
        else  // P- = t^2 P+ - t z P0
            val = LaurentBi::tz(2, 0) * a - LaurentBi::tz(1, 1) * b;
    }
    if (memo) {
        std::lock_guard<std::mutex> lock(memo->mx);
        memo->map.emplace(key, val);
    }
    return val;
}

LaurentBi rec_unit(const LinkDiagram& d, Memo* memo, bool naive, bool parallel) {
    LinkDiagram core = d;
    core.free_loops = 0;
    if (core.crossings.empty()) return bi_pow(delta_bi(), d.free_loops - 1);
    return bi_pow(delta_bi(), d.free_loops) * core_unit(core, memo, naive, parallel);
}

LaurentBi homfly_impl(const LinkDiagram& d, Normalization norm, Memo* memo, bool naive,
                      bool parallel, int max_crossings) {
    validate(d);
    if (int(d.crossings.size()) > max_crossings)
        throw CeilingExceeded("diagram exceeds the crossing ceiling");
    if (d.crossings.empty() && d.free_loops == 0)
        throw std::invalid_argument("empty link has no invariant");
    LaurentBi p = rec_unit(d, memo, naive, parallel);
    return norm == Normalization::Unit ? p : p * delta_bi();
}

}  // namespace

SkeinParams make_params(int M, int N, SkeinMode mode, int order) {
    if (M == N) throw std::invalid_argument("M = N is not allowed");
    if (M < 1 || N < 1) throw std::invalid_argument("M, N must be positive");
    SkeinParams p;
    p.mn = M - N;
    p.mode = mode;
    p.order = order;
    long mn = p.mn;
    p.alpha = LaurentUni::u_pow(mn * mn - 1);
    p.beta = LaurentUni::u_pow(1);
    p.z = LaurentUni::u_pow(mn) - LaurentUni::u_pow(-mn);
    p.t = LaurentUni::u_pow(mn * mn);
    p.delta = exact_div(LaurentUni::u_pow(mn * mn) - LaurentUni::u_pow(-mn * mn), p.z);
    p.alpha_s = q_power_series(rat(mn * mn - 1, 2 * mn), order);
    p.beta_s = q_power_series(rat(1, 2 * mn), order);
    p.z_s = q_power_series(rat(1, 2), order) - q_power_series(rat(-1, 2), order);
    p.t_s = q_power_series(rat(mn, 2), order);
    p.delta_s = EpsSeries::constant(GaussianRational(Rational(mn)), order);
    return p;
}

LaurentBi homfly(const LinkDiagram& d, Normalization norm, bool parallel, int max_crossings) {
    Memo memo;
    return homfly_impl(d, norm, &memo, false, parallel, max_crossings);
}

LaurentBi homfly_naive(const LinkDiagram& d, Normalization norm, int max_crossings) {
    return homfly_impl(d, norm, nullptr, true, false, max_crossings);
}

LaurentUni w_invariant(const LinkDiagram& d, const SkeinParams& p, bool parallel,
                       int max_crossings) {
    if (p.mode != SkeinMode::QExact)
        throw std::invalid_argument("regular-isotopy values need q-exact mode");
    LaurentBi paper = homfly(d, Normalization::Paper, parallel, max_crossings);
    LaurentUni v = specialize(paper, p.mn);
    long aexp = (long(p.mn) * p.mn - 1) * writhe(d);
    return LaurentUni::u_pow(aexp) * v;
}

LaurentUni jones(const LinkDiagram& d, bool parallel, int max_crossings) {
    return specialize(homfly(d, Normalization::Unit, parallel, max_crossings), 2);
}

bool verify_skein(const LinkDiagram& d, int c, SkeinEngine engine, const SkeinParams* p) {
    if (c < 0 || c >= int(d.crossings.size())) throw std::invalid_argument("bad crossing index");
    LinkDiagram sw = switch_crossing(d, c);
    LinkDiagram sm = smooth_crossing(d, c);
    bool positive = d.crossings[c].sign > 0;
    const LinkDiagram& lp = positive ? d : sw;
    const LinkDiagram& lm = positive ? sw : d;
    if (engine == SkeinEngine::Homfly) {
        LaurentBi lhs = LaurentBi::tz(1, 0) * homfly(lp, Normalization::Unit) -
                        LaurentBi::tz(-1, 0) * homfly(lm, Normalization::Unit);
        return lhs == LaurentBi::tz(0, 1) * homfly(sm, Normalization::Unit);
    }
    if (!p) throw std::invalid_argument("W engine needs skein params");
    LaurentUni lhs = LaurentUni::u_pow(1) * w_invariant(lp, *p) -
                     LaurentUni::u_pow(-1) * w_invariant(lm, *p);
    return lhs == p->z * w_invariant(sm, *p);
}

PerturbReport perturbative_check(int M, int N) {
    const int order = 2;
    SkeinParams p = make_params(M, N, SkeinMode::QExact, order);
    long mn = p.mn;
    long denom = 2 * mn;
    PerturbReport rep;
    auto coeff_str = [](const GaussianRational& c) { return to_string(c); };
    auto check = [&](const std::string& name, const EpsSeries& s,
                     const std::vector<GaussianRational>& expected) {
        bool ok = true;
        json want = json::array(), got = json::array();
        for (size_t n = 0; n < expected.size(); ++n) {
            if (s.c[n] != expected[n]) ok = false;
            want.push_back(coeff_str(expected[n]));
            got.push_back(coeff_str(s.c[n]));
        }
        rep.checks.push_back({{"name", name}, {"ok", ok}, {"expected", want}, {"actual", got}});
        if (!ok) rep.ok = false;
    };
    GaussianRational one(1), zero;
    GaussianRational m_i_c2(Rational(0), -rat(mn * mn - 1, 2 * mn));
    GaussianRational m_i_b(Rational(0), -rat(1, 2 * mn));
    GaussianRational m_i(Rational(0), Rational(-1));
    GaussianRational m_i_t(Rational(0), -rat(mn, 2));

    EpsSeries ea = expand_laurent_to_series(p.alpha, denom, order);
    EpsSeries eb = expand_laurent_to_series(p.beta, denom, order);
    EpsSeries ez = expand_laurent_to_series(p.z, denom, order);
    EpsSeries et = expand_laurent_to_series(p.t, denom, order);
    EpsSeries ed = expand_laurent_to_series(p.delta, denom, order);

    check("alpha = 1 - i eps C2", ea, {one, m_i_c2});
    check("beta = 1 - i eps / (2(M-N))", eb, {one, m_i_b});
    check("z = -i eps", ez, {zero, m_i});
    check("t = 1 - i eps (M-N)/2", et, {one, m_i_t});

    EpsSeries ba = eb * ea;
    EpsSeries cons = ba - ba.inverse() - ez * EpsSeries::constant(GaussianRational(Rational(mn)), order);
    check("beta alpha - (beta alpha)^-1 - z(M-N) = O(eps^2)", cons, {zero, zero});
    check("delta = (M-N) + O(eps^2)", ed, {GaussianRational(Rational(mn)), zero});
    return rep;
}

namespace {

SkeinTreeNode build_tree(const LinkDiagram& d) {
    SkeinTreeNode n;
    n.diagram = d;
    int bad = first_bad(d, false);
    if (bad < 0) {
        n.leaf_components = component_count(d);
        n.leaf_writhe = writhe(d);
        return n;
    }
    n.bad = bad;
    n.switched = std::make_unique<SkeinTreeNode>(build_tree(switch_crossing(d, bad)));
    n.smoothed = std::make_unique<SkeinTreeNode>(build_tree(smooth_crossing(d, bad)));
    return n;
}

}  // namespace

SkeinTreeNode skein_tree(const LinkDiagram& d, int max_crossings) {
    validate(d);
    if (int(d.crossings.size()) > max_crossings)
        throw CeilingExceeded("diagram exceeds the tree ceiling");
    return build_tree(d);
}

json tree_to_json(const SkeinTreeNode& n) {
    json j = {{"diagram", to_json(n.diagram)}};
    if (n.bad < 0) {
        j["leaf"] = {{"components", n.leaf_components}, {"writhe", n.leaf_writhe}};
    } else {
        j["bad"] = n.bad;
        j["switched"] = tree_to_json(*n.switched);
        j["smoothed"] = tree_to_json(*n.smoothed);
    }
    return j;
}

}  // namespace sumn
