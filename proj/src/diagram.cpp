#include "sumn/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sumn {

namespace {

// slot encoding: crossing index * 4 + {0: ui, 1: uo, 2: oi, 3: oo}
int& slot_ref(Crossing& c, int s) {
    switch (s) {
        case 0: return c.ui;
        case 1: return c.uo;
        case 2: return c.oi;
        default: return c.oo;
    }
}
int slot_val(const Crossing& c, int s) {
    switch (s) {
        case 0: return c.ui;
        case 1: return c.uo;
        case 2: return c.oi;
        default: return c.oo;
    }
}

// arc -> (crossing, slot) for the consuming (in) and producing (out) ends
struct Endpoints {
    std::map<int, std::pair<int, int>> in, out;
};

Endpoints endpoints(const LinkDiagram& d) {
    Endpoints e;
    for (int i = 0; i < int(d.crossings.size()); ++i)
        for (int s = 0; s < 4; ++s) {
            int a = slot_val(d.crossings[i], s);
            auto& side = (s == 0 || s == 2) ? e.in : e.out;
            if (!side.emplace(a, std::make_pair(i, s)).second)
                throw std::invalid_argument("arc appears twice on the same side");
        }
    return e;
}

int next_arc_id(const LinkDiagram& d) {
    int m = 0;
    for (const auto& c : d.crossings)
        m = std::max({m, c.ui + 1, c.uo + 1, c.oi + 1, c.oo + 1});
    return m;
}

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second != x) it->second = find(it->second);
        return it->second;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Removes the given crossings and reconnects the strands according to the
// glue pairs (each pair identifies two arcs as one strand).  A glue class
// touching no surviving crossing becomes a free loop.
LinkDiagram surgery(const LinkDiagram& d, const std::vector<int>& dead,
                    const std::vector<std::pair<int, int>>& glues) {
    std::set<int> deadset(dead.begin(), dead.end());
    UnionFind uf;
    for (const auto& [a, b] : glues) uf.unite(a, b);

    std::map<int, int> rep;  // class root -> minimal member
    for (const auto& [a, p] : uf.parent) {
        (void)p;
        int r = uf.find(a);
        auto it = rep.find(r);
        if (it == rep.end() || a < it->second) rep[r] = a;
    }

    LinkDiagram out;
    out.free_loops = d.free_loops;
    std::set<int> touched;  // class roots that reach a surviving crossing
    for (int i = 0; i < int(d.crossings.size()); ++i) {
        if (deadset.count(i)) continue;
        Crossing c = d.crossings[i];
        for (int s = 0; s < 4; ++s) {
            int a = slot_ref(c, s);
            if (uf.parent.count(a)) {
                int r = uf.find(a);
                touched.insert(r);
                slot_ref(c, s) = rep[r];
            }
        }
        out.crossings.push_back(c);
    }
    for (const auto& [r, m] : rep) {
        (void)m;
        if (!touched.count(r)) ++out.free_loops;
    }
    return out;
}

void check_index(const LinkDiagram& d, int c) {
    if (c < 0 || c >= int(d.crossings.size())) throw std::invalid_argument("bad crossing index");
}

}  // namespace

void validate(const LinkDiagram& d) {
    if (d.free_loops < 0) throw std::invalid_argument("negative free loop count");
    for (const auto& c : d.crossings)
        if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
    Endpoints e = endpoints(d);
    for (const auto& [a, p] : e.in) {
        (void)p;
        if (!e.out.count(a)) throw std::invalid_argument("arc consumed but never produced");
    }
    for (const auto& [a, p] : e.out) {
        (void)p;
        if (!e.in.count(a)) throw std::invalid_argument("arc produced but never consumed");
    }
}

std::vector<int> arc_ids(const LinkDiagram& d) {
    std::set<int> s;
    for (const auto& c : d.crossings) {
        s.insert(c.ui);
        s.insert(c.uo);
        s.insert(c.oi);
        s.insert(c.oo);
    }
    return {s.begin(), s.end()};
}

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be positive");
    BraidWord w{strands, {}};
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad braid letter: " + tok);
        }
        if (pos != tok.size()) throw std::invalid_argument("bad braid letter: " + tok);
        if (v == 0 || std::abs(v) >= strands)
            throw std::invalid_argument("braid letter out of range: " + tok);
        w.letters.push_back(v);
    }
    return w;
}

LinkDiagram braid_closure(const BraidWord& w) {
    int n = w.strands;
    std::vector<int> cur(n);
    std::vector<bool> touched(n, false);
    for (int i = 0; i < n; ++i) cur[i] = i;
    int fresh = n;
    LinkDiagram d;
    for (int letter : w.letters) {
        int i = std::abs(letter) - 1;
        touched[i] = touched[i + 1] = true;
        int lo = fresh++, hi = fresh++;
        if (letter > 0)
            d.crossings.push_back({+1, cur[i + 1], lo, cur[i], hi});
        else
            d.crossings.push_back({-1, cur[i], hi, cur[i + 1], lo});
        cur[i] = lo;
        cur[i + 1] = hi;
    }
    // close up: the arc leaving position j is the arc that entered it
    Endpoints e = endpoints(d);
    for (int j = 0; j < n; ++j) {
        if (!touched[j]) {
            ++d.free_loops;
            continue;
        }
        auto [ci, s] = e.out.at(cur[j]);
        slot_ref(d.crossings[ci], s) = j;
    }
    validate(d);
    return d;
}

int writhe(const LinkDiagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

int component_count(const LinkDiagram& d) {
    // follow each arc through its consuming crossing
    std::map<int, int> next;
    for (const auto& c : d.crossings) {
        next[c.ui] = c.uo;
        next[c.oi] = c.oo;
    }
    std::set<int> seen;
    int count = d.free_loops;
    for (const auto& [a, b] : next) {
        (void)b;
        if (seen.count(a)) continue;
        ++count;
        int x = a;
        while (!seen.count(x)) {
            seen.insert(x);
            x = next.at(x);
        }
    }
    return count;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int ci) {
    check_index(d, ci);
    LinkDiagram r = d;
    Crossing& c = r.crossings[ci];
    c = {-c.sign, c.oi, c.oo, c.ui, c.uo};
    return r;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int ci) {
    check_index(d, ci);
    const Crossing& c = d.crossings[ci];
    return surgery(d, {ci}, {{c.ui, c.oo}, {c.oi, c.uo}});
}

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram r = d;
    for (auto& c : r.crossings) c = {-c.sign, c.oi, c.oo, c.ui, c.uo};
    return r;
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
    LinkDiagram r = a;
    int off = next_arc_id(a);
    for (Crossing c : b.crossings) {
        c.ui += off;
        c.uo += off;
        c.oi += off;
        c.oo += off;
        r.crossings.push_back(c);
    }
    r.free_loops += b.free_loops;
    return r;
}

LinkDiagram r1_insert(const LinkDiagram& d, int arc, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("curl sign must be +-1");
    LinkDiagram r = d;
    int fresh = next_arc_id(d);
    if (arc < 0) {
        if (d.free_loops < 1) throw std::invalid_argument("no free loop to curl");
        --r.free_loops;
        int a = fresh, x = fresh + 1;
        r.crossings.push_back({sign, a, x, x, a});
        return r;
    }
    Endpoints e = endpoints(d);
    auto it = e.in.find(arc);
    if (it == e.in.end()) throw std::invalid_argument("no such arc");
    int x = fresh, y = fresh + 1;
    slot_ref(r.crossings[it->second.first], it->second.second) = y;
    r.crossings.push_back({sign, arc, x, x, y});
    return r;
}

std::vector<std::vector<std::pair<int, int>>> face_orbits(const LinkDiagram& d) {
    Endpoints e = endpoints(d);
    // counterclockwise end order per crossing, as slot indices
    auto rotation = [](const Crossing& c) {
        return c.sign > 0 ? std::array<int, 4>{2, 1, 3, 0} : std::array<int, 4>{2, 0, 3, 1};
    };
    // dart (arc, dir): dir 0 runs with the arc, 1 against it
    auto next_dart = [&](std::pair<int, int> dart) {
        auto [ci, slot] = dart.second == 0 ? e.in.at(dart.first) : e.out.at(dart.first);
        const Crossing& c = d.crossings[ci];
        auto rot = rotation(c);
        int pos = 0;
        while (rot[pos] != slot) ++pos;
        int s2 = rot[(pos + 3) % 4];  // clockwise neighbor keeps the face on the left
        int a2 = slot_val(c, s2);
        return std::make_pair(a2, (s2 == 1 || s2 == 3) ? 0 : 1);
    };
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<std::pair<int, int>>> faces;
    for (int a : arc_ids(d))
        for (int dir : {0, 1}) {
            std::pair<int, int> start{a, dir};
            if (seen.count(start)) continue;
            std::vector<std::pair<int, int>> orbit;
            auto cur = start;
            do {
                orbit.push_back(cur);
                seen.insert(cur);
                cur = next_dart(cur);
            } while (cur != start);
            faces.push_back(std::move(orbit));
        }
    return faces;
}

LinkDiagram r2_insert(const LinkDiagram& d, int arc_a, int arc_b) {
    if (arc_a == arc_b) throw std::invalid_argument("type-II push needs two distinct arcs");
    Endpoints e = endpoints(d);
    if (!e.in.count(arc_a) || !e.in.count(arc_b)) throw std::invalid_argument("no such arc");
    // the push happens across a face both arcs border; the dart directions
    // fix the relative orientation and hence the two crossing signs
    int da = -1, db = -1;
    for (const auto& face : face_orbits(d)) {
        int fa = -1, fb = -1;
        for (const auto& [arc, dir] : face) {
            if (arc == arc_a && fa < 0) fa = dir;
            if (arc == arc_b && fb < 0) fb = dir;
        }
        if (fa >= 0 && fb >= 0) {
            da = fa;
            db = fb;
            break;
        }
    }
    if (da < 0) throw std::invalid_argument("arcs do not cobound a face");
    LinkDiagram r = d;
    int fresh = next_arc_id(d);
    int p = fresh, q = fresh + 1, t = fresh + 2, s = fresh + 3;
    auto [ca, sa] = e.in.at(arc_a);
    auto [cb, sb] = e.in.at(arc_b);
    slot_ref(r.crossings[ca], sa) = q;
    slot_ref(r.crossings[cb], sb) = s;
    int n1sign = db == 1 ? +1 : -1;
    if (da != db) {  // strands run parallel along the face
        r.crossings.push_back({n1sign, arc_b, t, arc_a, p});
        r.crossings.push_back({-n1sign, t, s, p, q});
    } else {
        r.crossings.push_back({n1sign, t, s, arc_a, p});
        r.crossings.push_back({-n1sign, arc_b, t, p, q});
    }
    return r;
}

namespace {

bool on_strand(const Crossing& c, int arc, bool under) {
    return under ? (c.ui == arc || c.uo == arc) : (c.oi == arc || c.oo == arc);
}

// other arc of the same strand of c
int strand_mate(const Crossing& c, int arc) {
    if (c.ui == arc) return c.uo;
    if (c.uo == arc) return c.ui;
    if (c.oi == arc) return c.oo;
    return c.oi;
}

}  // namespace

std::vector<R3Site> r3_sites(const LinkDiagram& d) {
    std::vector<R3Site> sites;
    int n = int(d.crossings.size());
    // triangular faces are the only places a type-III slide can happen
    std::vector<std::set<int>> tris;
    for (const auto& face : face_orbits(d)) {
        if (face.size() != 3) continue;
        std::set<int> arcs;
        for (const auto& [arc, dir] : face) arcs.insert(arc);
        if (arcs.size() == 3) tris.push_back(std::move(arcs));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Crossing& ca = d.crossings[i];
            const Crossing& cb = d.crossings[j];
            if (ca.oo != cb.oi) continue;  // over strand must run i -> j
            int m = ca.oo;
            for (const auto& tri : tris) {
                if (!tri.count(m)) continue;
                int sa = -1, sb = -1;
                for (int arc : tri) {
                    if (arc == m) continue;
                    if (arc == ca.ui || arc == ca.uo) sa = arc;
                    if (arc == cb.ui || arc == cb.uo) sb = arc;
                }
                if (sa < 0 || sb < 0 || sa == sb) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    const Crossing& c3 = d.crossings[k];
                    bool a_under = on_strand(c3, sa, true);
                    bool a_over = on_strand(c3, sa, false);
                    bool b_under = on_strand(c3, sb, true);
                    bool b_over = on_strand(c3, sb, false);
                    if (!((a_under && b_over) || (a_over && b_under))) continue;
                    // reject degenerate sites: all arcs in play distinct
                    int wy = strand_mate(c3, sa), wz = strand_mate(c3, sb);
                    std::vector<int> arcs = {ca.oi, ca.oo, cb.oo, ca.ui, ca.uo,
                                             cb.ui, cb.uo, wy,    wz};
                    std::sort(arcs.begin(), arcs.end());
                    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) continue;
                    sites.push_back({i, j, k});
                    break;
                }
            }
        }
    return sites;
}

LinkDiagram r3_apply(const LinkDiagram& d, const R3Site& s) {
    check_index(d, s.ca);
    check_index(d, s.cb);
    check_index(d, s.c3);
    const Crossing ca = d.crossings[s.ca];
    const Crossing cb = d.crossings[s.cb];
    const Crossing c3 = d.crossings[s.c3];
    if (ca.oo != cb.oi) throw std::invalid_argument("not a type-III site");
    int a = ca.oi, m = ca.oo, b = cb.oo;

    int sa = on_strand(c3, ca.ui, true) || on_strand(c3, ca.ui, false) ? ca.ui : ca.uo;
    int sb = on_strand(c3, cb.ui, true) || on_strand(c3, cb.ui, false) ? cb.ui : cb.uo;
    int wy = strand_mate(c3, sa);  // far arc of the first under strand
    int wz = strand_mate(c3, sb);  // far arc of the second under strand

    LinkDiagram r;
    r.free_loops = d.free_loops;
    for (int i = 0; i < int(d.crossings.size()); ++i)
        if (i != s.ca && i != s.cb) r.crossings.push_back(d.crossings[i]);

    // splice the under strands straight through the removed crossings
    Endpoints e = endpoints(r);
    auto rename_in = [&](int from, int to) {
        auto it = e.in.find(from);
        if (it == e.in.end()) throw std::invalid_argument("not a type-III site");
        slot_ref(r.crossings[it->second.first], it->second.second) = to;
    };
    rename_in(ca.uo, ca.ui);
    rename_in(cb.uo, cb.ui);

    // re-cross on the far side of the third crossing, in reversed order
    int fresh = next_arc_id(d);
    int wz2 = fresh, wy2 = fresh + 1;
    e = endpoints(r);
    rename_in(wz, wz2);
    rename_in(wy, wy2);
    r.crossings.push_back({cb.sign, wz, wz2, a, m});
    r.crossings.push_back({ca.sign, wy, wy2, m, b});
    validate(r);
    return r;
}

LinkDiagram simplify(const LinkDiagram& d) {
    LinkDiagram cur = d;
    bool changed = true;
    while (changed) {
        changed = false;
        int n = int(cur.crossings.size());
        for (int i = 0; i < n && !changed; ++i) {
            const Crossing& c = cur.crossings[i];
            if (c.uo == c.oi || c.oo == c.ui) {  // curl
                cur = surgery(cur, {i}, {{c.ui, c.uo}, {c.oi, c.oo}});
                changed = true;
            }
        }
        for (int i = 0; i < n && !changed; ++i)
            for (int j = 0; j < n && !changed; ++j) {
                if (i == j) continue;
                const Crossing& c = cur.crossings[i];
                const Crossing& e = cur.crossings[j];
                if (c.sign == e.sign) continue;
                bool parallel = c.uo == e.ui && c.oo == e.oi;
                bool antiparallel = c.oo == e.oi && e.uo == c.ui;
                if (parallel || antiparallel) {
                    cur = surgery(cur, {i, j},
                                  {{c.ui, c.uo}, {c.oi, c.oo}, {e.ui, e.uo}, {e.oi, e.oo}});
                    changed = true;
                }
            }
    }
    return cur;
}

namespace {

std::string component_signature(const LinkDiagram& d, const Endpoints& e, int start) {
    std::map<int, int> label;
    std::vector<int> queue = {start};
    label[start] = 0;
    auto lab = [&](int a) {
        auto it = label.find(a);
        if (it != label.end()) return it->second;
        int v = int(label.size());
        label[a] = v;
        queue.push_back(a);
        return v;
    };
    std::set<int> emitted;
    std::ostringstream os;
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [ci, s] = e.in.at(queue[i]);
        (void)s;
        if (!emitted.insert(ci).second) continue;
        const Crossing& c = d.crossings[ci];
        os << (c.sign > 0 ? '+' : '-') << lab(c.ui) << ',' << lab(c.uo) << ',' << lab(c.oi) << ','
           << lab(c.oo) << ';';
    }
    return os.str();
}

}  // namespace

std::string canonical_key(const LinkDiagram& d) {
    Endpoints e = endpoints(d);
    // connected pieces of the crossing graph, via shared arcs
    UnionFind uf;
    for (const auto& c : d.crossings) {
        uf.unite(c.ui, c.uo);
        uf.unite(c.ui, c.oi);
        uf.unite(c.ui, c.oo);
    }
    std::map<int, std::vector<int>> pieces;  // root -> arcs
    for (int a : arc_ids(d)) pieces[uf.find(a)].push_back(a);
    std::vector<std::string> sigs;
    for (const auto& [root, arcs] : pieces) {
        (void)root;
        std::string best;
        for (int a : arcs) {
            std::string s = component_signature(d, e, a);
            if (best.empty() || s < best) best = std::move(s);
        }
        sigs.push_back(std::move(best));
    }
    std::sort(sigs.begin(), sigs.end());
    std::ostringstream os;
    os << 'F' << d.free_loops << '|';
    for (const auto& s : sigs) os << s << '|';
    return os.str();
}

json to_json(const LinkDiagram& d) {
    json cs = json::array();
    for (const auto& c : d.crossings)
        cs.push_back({{"sign", c.sign}, {"ui", c.ui}, {"uo", c.uo}, {"oi", c.oi}, {"oo", c.oo}});
    return {{"crossings", cs}, {"closures", json::array()}, {"free_loops", d.free_loops}};
}

LinkDiagram diagram_from_json(const json& j) {
    LinkDiagram d;
    d.free_loops = j.value("free_loops", 0);
    for (const auto& c : j.at("crossings"))
        d.crossings.push_back({c.at("sign").get<int>(), c.at("ui").get<int>(),
                               c.at("uo").get<int>(), c.at("oi").get<int>(),
                               c.at("oo").get<int>()});
    if (j.contains("closures") && !j.at("closures").empty()) {
        std::vector<std::pair<int, int>> glues;
        for (const auto& p : j.at("closures"))
            glues.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        d = surgery(d, {}, glues);
    }
    validate(d);
    return d;
}

}  // namespace sumn
