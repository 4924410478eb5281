#pragma once

#include <string>
#include <vector>

#include "sumn/json_io.hpp"

namespace sumn {

// One crossing of an oriented diagram.  Arcs are integer ids; the under
// strand runs ui -> uo, the over strand oi -> oo.  Sign +1 is the crossing
// where the over strand passes left-to-right in front (right-hand rule).
struct Crossing {
    int sign;
    int ui, uo, oi, oo;
    friend bool operator==(const Crossing& a, const Crossing& b) {
        return a.sign == b.sign && a.ui == b.ui && a.uo == b.uo && a.oi == b.oi && a.oo == b.oo;
    }
};

// Closed oriented link diagram.  Every arc id appears exactly once as an
// "in" endpoint (ui or oi) and exactly once as an "out" endpoint (uo or oo)
// across the crossing list; closure maps from external formats are
// contracted away at parse time.  free_loops counts crossingless circles.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
        return a.crossings == b.crossings && a.free_loops == b.free_loops;
    }
};

struct BraidWord {
    int strands;
    std::vector<int> letters;  // i > 0 for sigma_i, i < 0 for its inverse
};

// Throws std::invalid_argument when the once-in/once-out arc invariant or
// basic field sanity fails.
void validate(const LinkDiagram& d);

std::vector<int> arc_ids(const LinkDiagram& d);

BraidWord parse_braid(const std::string& text, int strands);
LinkDiagram braid_closure(const BraidWord& w);

int writhe(const LinkDiagram& d);
int component_count(const LinkDiagram& d);

LinkDiagram switch_crossing(const LinkDiagram& d, int c);
LinkDiagram smooth_crossing(const LinkDiagram& d, int c);
LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

// Faces of the planar diagram, as orbits of darts (arc, direction) under
// the canonical rotation system; direction 0 follows the arc orientation.
// For a connected planar diagram the orbit count is crossings + 2.
std::vector<std::vector<std::pair<int, int>>> face_orbits(const LinkDiagram& d);

// Reidemeister moves.  R1 takes an arc of d (arc < 0 targets a free loop);
// R2 pushes the strand of arc_a over arc_b across a face they cobound and
// rejects pairs that do not share one; type-III sites are triangular faces.
LinkDiagram r1_insert(const LinkDiagram& d, int arc, int sign);
LinkDiagram r2_insert(const LinkDiagram& d, int arc_a, int arc_b);

struct R3Site {
    int ca, cb, c3;  // crossing indices: over strand runs through ca then cb
};
std::vector<R3Site> r3_sites(const LinkDiagram& d);
LinkDiagram r3_apply(const LinkDiagram& d, const R3Site& s);

// Greedy reducing R1/R2 removals until no pattern matches.
LinkDiagram simplify(const LinkDiagram& d);

// Label-independent key: minimal traversal signature per connected piece.
// Equal keys mean equal diagrams up to arc relabeling.
std::string canonical_key(const LinkDiagram& d);

json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const json& j);

}  // namespace sumn
