#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "sumn/diagram.hpp"
#include "sumn/skein.hpp"
#include "sumn/superalgebra.hpp"

using namespace sumn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCeiling = 3;
constexpr int kExitVerify = 4;

std::string coeff_str(const GaussianRational& c) {
    if (c.im == 0) return rational_str(c.re);
    return "(" + to_string(c) + ")";
}

void append_term(std::string& s, const GaussianRational& c, const std::string& mono) {
    GaussianRational v = c;
    if (s.empty()) {
        if (v.im == 0 && v.re < 0) {
            s += "-";
            v = -v;
        }
    } else {
        if (v.im == 0 && v.re < 0) {
            s += " - ";
            v = -v;
        } else {
            s += " + ";
        }
    }
    bool unit = (v == GaussianRational(1));
    if (!unit || mono.empty()) s += coeff_str(v);
    if (!mono.empty()) {
        if (!unit) s += "*";
        s += mono;
    }
}

std::string uni_str(const LaurentUni& p, const std::string& var = "u") {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        std::string mono;
        if (it->first != 0)
            mono = var + (it->first == 1 ? "" : "^" + std::to_string(it->first));
        append_term(s, it->second, mono);
    }
    return s;
}

std::string bi_str(const LaurentBi& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        auto [et, ez] = it->first;
        std::string mono;
        if (et != 0) mono += "t" + std::string(et == 1 ? "" : "^" + std::to_string(et));
        if (ez != 0) {
            if (!mono.empty()) mono += "*";
            mono += "z" + std::string(ez == 1 ? "" : "^" + std::to_string(ez));
        }
        append_term(s, it->second, mono);
    }
    return s;
}

struct Opts {
    int M = 0, N = 0;
    std::string mode = "q-exact";
    std::string normalization = "unit";
    std::string kind = "homfly";
    std::string braid;
    bool braid_set = false;
    int strands = 2;
    std::string pd_file;
    int order = 2;
    int max_crossings = 14;
    std::string output = "json";
    std::string suite = "all";
    std::string file = "data/corpus.jsonl";
};

LinkDiagram load_diagram(const Opts& o) {
    if (o.braid_set && !o.pd_file.empty())
        throw std::invalid_argument("give either --braid or --pd-file, not both");
    if (o.braid_set) return braid_closure(parse_braid(o.braid, o.strands));
    if (!o.pd_file.empty()) {
        std::ifstream in(o.pd_file);
        if (!in) throw std::invalid_argument("cannot read " + o.pd_file);
        json j;
        in >> j;
        return diagram_from_json(j);
    }
    throw std::invalid_argument("a diagram is required (--braid or --pd-file)");
}

Normalization norm_of(const Opts& o) {
    if (o.normalization == "unit") return Normalization::Unit;
    if (o.normalization == "paper") return Normalization::Paper;
    throw std::invalid_argument("unknown normalization: " + o.normalization);
}

SkeinMode mode_of(const Opts& o) {
    if (o.mode == "q-exact") return SkeinMode::QExact;
    if (o.mode == "paper-literal") return SkeinMode::PaperLiteral;
    throw std::invalid_argument("unknown mode: " + o.mode);
}

void require_mn(const Opts& o) {
    if (o.M == 0 && o.N == 0) throw std::invalid_argument("--M and --N are required here");
    if (o.M == o.N) throw std::invalid_argument("M = N is not allowed");
    if (o.M < 1 || o.N < 1) throw std::invalid_argument("M, N must be positive");
}

json invariant_result(const Opts& o, const std::string& name, const LinkDiagram& d,
                      std::string* pretty) {
    json r = {{"name", name},
              {"invariant", o.kind},
              {"writhe", writhe(d)},
              {"components", component_count(d)}};
    if (o.kind == "homfly") {
        LaurentBi p = homfly(d, norm_of(o), false, o.max_crossings);
        r["normalization"] = o.normalization;
        r["poly"] = to_json(p);
        if (pretty) *pretty = bi_str(p);
    } else if (o.kind == "jones") {
        LaurentUni p = jones(d, false, o.max_crossings);
        r["poly"] = to_json(p);
        if (pretty) *pretty = uni_str(p);
    } else if (o.kind == "w" || o.kind == "sl") {
        require_mn(o);
        SkeinParams sp = make_params(o.M, o.N, SkeinMode::QExact, o.order);
        LaurentUni p = w_invariant(d, sp, false, o.max_crossings);
        r["M"] = o.M;
        r["N"] = o.N;
        r["mode"] = "q-exact";
        r["poly"] = to_json(p);
        if (o.kind == "sl")
            r["params"] = {{"alpha", to_json(sp.alpha)},
                           {"beta", to_json(sp.beta)},
                           {"z", to_json(sp.z)},
                           {"t", to_json(sp.t)},
                           {"delta", to_json(sp.delta)}};
        if (pretty) *pretty = uni_str(p);
    } else {
        throw std::invalid_argument("unknown kind: " + o.kind);
    }
    return r;
}

bool mat_eq(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

json algebra_suite(int M, int N, bool& all_ok) {
    AlgebraContext ctx(M, N);
    int d = ctx.dim();
    json out = json::array();
    auto record = [&](const std::string& name, long cases, bool ok, const std::string& cex) {
        out.push_back({{"identity", name},
                       {"cases", cases},
                       {"ok", ok},
                       {"first_counterexample", cex}});
        if (!ok) all_ok = false;
    };

    {
        bool ok = true;
        std::string cex;
        long n = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                ++n;
                if (!supertrace(ehat(a, b, ctx).m, ctx).is_zero()) {
                    ok = false;
                    cex = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        Mat sum = Mat::Zero(d, d);
        for (int a = 1; a <= d; ++a) sum += ehat(a, a, ctx).m;
        if (!mat_eq(sum, Mat::Zero(d, d))) {
            ok = false;
            cex = "sum ehat_aa != 0";
        }
        record("supertrace(ehat)=0 and sum ehat_aa=0", n + 1, ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        long n = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b)
                for (int c = 1; c <= d && ok; ++c)
                    for (int e = 1; e <= d && ok; ++e) {
                        ++n;
                        Mat lhs = super_bracket(ehat(a, b, ctx), ehat(c, e, ctx)).m;
                        if (!mat_eq(lhs, commutation_rhs(a, b, c, e, ctx))) {
                            ok = false;
                            cex = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + "," + std::to_string(e) + ")";
                        }
                    }
        record("super commutation relation", n, ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        long n = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b)
                for (int c = 1; c <= d && ok; ++c)
                    for (int e = 1; e <= d && ok; ++e) {
                        ++n;
                        GaussianRational direct =
                            supertrace(ehat(a, b, ctx).m * ehat(c, e, ctx).m, ctx);
                        if (direct != str2_closed(a, b, c, e, ctx)) {
                            ok = false;
                            cex = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + "," + std::to_string(e) + ")";
                        }
                    }
        record("two-factor supertrace closed form", n, ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        long n = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b)
                for (int c = 1; c <= d && ok; ++c)
                    for (int e = 1; e <= d && ok; ++e)
                        for (int f = 1; f <= d && ok; ++f)
                            for (int g = 1; g <= d && ok; ++g) {
                                ++n;
                                GaussianRational direct = supertrace(
                                    ehat(a, b, ctx).m * ehat(c, e, ctx).m * ehat(f, g, ctx).m,
                                    ctx);
                                if (direct != str3_closed(a, b, c, e, f, g, ctx)) {
                                    ok = false;
                                    cex = "(" + std::to_string(a) + "," + std::to_string(b) +
                                          "," + std::to_string(c) + "," + std::to_string(e) +
                                          "," + std::to_string(f) + "," + std::to_string(g) +
                                          ")";
                                }
                            }
        record("three-factor supertrace closed form", n, ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        long n = 0;
        for (int i = 1; i <= d && ok; ++i)
            for (int j = 1; j <= d && ok; ++j)
                for (int k = 1; k <= d && ok; ++k)
                    for (int l = 1; l <= d && ok; ++l) {
                        ++n;
                        if (fierz_lhs(i, j, k, l, ctx) != fierz_rhs(i, j, k, l, ctx)) {
                            ok = false;
                            cex = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + "," + std::to_string(l) + ")";
                        }
                    }
        record("Fierz identity", n, ok, cex);
    }
    {
        Mat want = Mat::Zero(d, d);
        GaussianRational v(casimir_value(ctx) * 2);
        for (int i = 0; i < d; ++i) want(i, i) = v;
        bool ok = mat_eq(casimir(ctx), want);
        record("Casimir operator = 2 C2 I", 1, ok, ok ? "" : "operator mismatch");
    }
    {
        bool ok = true;
        std::string cex;
        long n = 0;
        auto check_gen = [&](const GradedMatrix& g, const std::string& name) {
            ++n;
            if (!supertrace(g.m, ctx).is_zero()) {
                ok = false;
                cex = name + " not supertraceless";
                return;
            }
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (conj(g.m(j, i)) != g.m(i, j)) {
                        ok = false;
                        cex = name + " not hermitian";
                        return;
                    }
        };
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                if (a == b) continue;
                check_gen(generators(GenKind::E, a, b, ctx),
                          "E(" + std::to_string(a) + "," + std::to_string(b) + ")");
                if (ok)
                    check_gen(generators(GenKind::F, a, b, ctx),
                              "F(" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
        for (int c = 1; c <= d - 1 && ok; ++c)
            check_gen(generators(GenKind::H, c, c, ctx), "H(" + std::to_string(c) + ")");
        record("generators supertraceless and hermitian", n, ok, cex);
    }
    return out;
}

struct CorpusEntry {
    std::string name;
    LinkDiagram diagram;
};

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read corpus file " + path);
    std::vector<CorpusEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line);
        CorpusEntry e;
        e.name = j.at("name").get<std::string>();
        if (j.contains("braid"))
            e.diagram = braid_closure(
                parse_braid(j.at("braid").get<std::string>(), j.at("strands").get<int>()));
        else
            e.diagram = diagram_from_json(j.at("pd"));
        entries.push_back(std::move(e));
    }
    return entries;
}

json skein_suite(const std::string& corpus_path, bool& all_ok) {
    json out = json::array();
    for (const auto& e : load_corpus(corpus_path)) {
        if (int(e.diagram.crossings.size()) > 9) continue;
        long checks = 0, failures = 0;
        std::string first;
        for (int c = 0; c < int(e.diagram.crossings.size()); ++c) {
            ++checks;
            if (!verify_skein(e.diagram, c, SkeinEngine::Homfly)) {
                ++failures;
                if (first.empty()) first = "homfly crossing " + std::to_string(c);
            }
            for (auto [m, n] : {std::pair<int, int>{3, 1}, {4, 1}}) {
                ++checks;
                SkeinParams p = make_params(m, n, SkeinMode::QExact, 1);
                if (!verify_skein(e.diagram, c, SkeinEngine::W, &p)) {
                    ++failures;
                    if (first.empty())
                        first = "w(" + std::to_string(m) + "," + std::to_string(n) +
                                ") crossing " + std::to_string(c);
                }
            }
        }
        if (failures > 0) all_ok = false;
        out.push_back({{"name", e.name},
                       {"checks", checks},
                       {"failures", failures},
                       {"first_failure", first}});
    }
    return out;
}

void emit(const json& j, const Opts& o, const std::string& pretty) {
    if (o.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << pretty << "\n";
}

int run(const std::string& cmd, const Opts& o) {
    if (cmd == "invariant") {
        LinkDiagram d = load_diagram(o);
        std::string pretty;
        json r = invariant_result(o, o.braid_set ? o.braid : o.pd_file, d, &pretty);
        emit(r, o, pretty);
        return kExitOk;
    }
    if (cmd == "verify") {
        bool ok = true;
        json report = json::object();
        if (o.suite == "algebra" || o.suite == "all") {
            require_mn(o);
            report["algebra"] = algebra_suite(o.M, o.N, ok);
        }
        if (o.suite == "skein" || o.suite == "all") report["skein"] = skein_suite(o.file, ok);
        if (o.suite == "perturbative" || o.suite == "all") {
            require_mn(o);
            PerturbReport pr = perturbative_check(o.M, o.N);
            report["perturbative"] = pr.checks;
            if (!pr.ok) ok = false;
        }
        report["ok"] = ok;
        std::cout << report.dump(2) << "\n";
        return ok ? kExitOk : kExitVerify;
    }
    if (cmd == "corpus") {
        auto entries = load_corpus(o.file);
        std::vector<std::future<std::pair<json, std::string>>> rows;
        for (const auto& e : entries)
            rows.push_back(std::async(std::launch::async, [&o, &e] {
                std::string pretty;
                json r;
                try {
                    r = invariant_result(o, e.name, e.diagram, &pretty);
                } catch (const std::exception& ex) {
                    r = {{"name", e.name}, {"error", ex.what()}};
                    pretty = std::string("error: ") + ex.what();
                }
                return std::make_pair(r, e.name + ": " + pretty);
            }));
        for (auto& f : rows) {
            auto [r, pretty] = f.get();
            emit(r, o, pretty);
        }
        return kExitOk;
    }
    if (cmd == "expand") {
        require_mn(o);
        SkeinParams p = make_params(o.M, o.N, mode_of(o), o.order);
        long denom = 2L * p.mn;
        json r = {{"M", o.M},
                  {"N", o.N},
                  {"mode", o.mode},
                  {"order", o.order},
                  {"alpha", to_json(p.alpha)},
                  {"beta", to_json(p.beta)},
                  {"z", to_json(p.z)},
                  {"t", to_json(p.t)},
                  {"delta", to_json(p.delta)},
                  {"series",
                   {{"alpha", to_json(mode_of(o) == SkeinMode::PaperLiteral
                                          ? p.alpha_s
                                          : expand_laurent_to_series(p.alpha, denom, o.order))},
                    {"beta", to_json(expand_laurent_to_series(p.beta, denom, o.order))},
                    {"z", to_json(expand_laurent_to_series(p.z, denom, o.order))},
                    {"t", to_json(expand_laurent_to_series(p.t, denom, o.order))},
                    {"delta", to_json(mode_of(o) == SkeinMode::PaperLiteral
                                          ? p.delta_s
                                          : expand_laurent_to_series(p.delta, denom, o.order))}}}};
        std::ostringstream pretty;
        pretty << "alpha=" << uni_str(p.alpha) << " beta=" << uni_str(p.beta)
               << " z=" << uni_str(p.z) << " t=" << uni_str(p.t)
               << " delta=" << uni_str(p.delta);
        emit(r, o, pretty.str());
        return kExitOk;
    }
    if (cmd == "tree") {
        LinkDiagram d = load_diagram(o);
        SkeinTreeNode t = skein_tree(d, std::min(o.max_crossings, 10));
        std::cout << tree_to_json(t).dump(2) << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"su(M|N) Chern-Simons link invariants and algebra checks"};
    app.require_subcommand(1);
    Opts o;
    std::string cmd;
    for (const char* name : {"invariant", "verify", "corpus", "expand", "tree"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--M", o.M);
        sub->add_option("--N", o.N);
        sub->add_option("--mode", o.mode)->check(CLI::IsMember({"q-exact", "paper-literal"}));
        sub->add_option("--normalization", o.normalization)
            ->check(CLI::IsMember({"unit", "paper"}));
        sub->add_option("--kind", o.kind)->check(CLI::IsMember({"homfly", "w", "jones", "sl"}));
        sub->add_option("--braid", o.braid)->each([&o](const std::string&) { o.braid_set = true; });
        sub->add_option("--strands", o.strands);
        sub->add_option("--pd-file", o.pd_file);
        sub->add_option("--order", o.order)->check(CLI::Range(0, 4));
        sub->add_option("--max-crossings", o.max_crossings);
        sub->add_option("--output", o.output)->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--suite", o.suite)
            ->check(CLI::IsMember({"algebra", "skein", "perturbative", "all"}));
        sub->add_option("--file", o.file);
        sub->callback([&cmd, name] { cmd = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }
    try {
        return run(cmd, o);
    } catch (const CeilingExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCeiling;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
