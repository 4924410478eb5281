#pragma once

#include <memory>
#include <stdexcept>

#include "sumn/diagram.hpp"
#include "sumn/json_io.hpp"
#include "sumn/laurent.hpp"
#include "sumn/series.hpp"

namespace sumn {

enum class SkeinMode { QExact, PaperLiteral };
enum class Normalization { Unit, Paper };

// Raised when a diagram exceeds a documented size ceiling.
struct CeilingExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The parameter tuple (alpha, beta, z, t, delta) for su(M|N).  q-exact
// values live in u = q^{1/(2(M-N))}; the paper-literal ones are series in
// eps = 2 pi / k with delta kept at the literal M-N.
struct SkeinParams {
    int mn;
    SkeinMode mode;
    int order;
    LaurentUni alpha, beta, z, t, delta;
    EpsSeries alpha_s, beta_s, z_s, t_s, delta_s;
};

SkeinParams make_params(int M, int N, SkeinMode mode, int order = 1);

// Two-variable invariant by skein recursion over descending diagrams,
// memoized on the canonical diagram key.  Unit normalization gives 1 on the
// unknot; paper normalization gives delta = (t - t^-1)/z.
LaurentBi homfly(const LinkDiagram& d, Normalization norm, bool parallel = false,
                 int max_crossings = 14);

// Independent oracle: same relation, no memo, opposite base point choice.
LaurentBi homfly_naive(const LinkDiagram& d, Normalization norm, int max_crossings = 14);

// Regular-isotopy invariant: alpha^writhe times the specialized paper-
// normalized polynomial.  q-exact mode only.
LaurentUni w_invariant(const LinkDiagram& d, const SkeinParams& p, bool parallel = false,
                       int max_crossings = 14);

// The M-N = 2 specialization (output in u = q^{1/4}).
LaurentUni jones(const LinkDiagram& d, bool parallel = false, int max_crossings = 14);

enum class SkeinEngine { Homfly, W };

// Evaluates all three of L+, L-, L0 at the given crossing independently and
// checks the skein relation exactly.  The W engine needs params.
bool verify_skein(const LinkDiagram& d, int c, SkeinEngine engine,
                  const SkeinParams* p = nullptr);

struct PerturbReport {
    bool ok = true;
    json checks = json::array();
};

// First-order expansion of the q-exact parameters and the consistency
// relation beta alpha - (beta alpha)^-1 = z (M-N) + O(eps^2).
PerturbReport perturbative_check(int M, int N);

// Full branch tree of the recursion, without memo collapsing.
struct SkeinTreeNode {
    LinkDiagram diagram;
    int bad = -1;  // branching crossing; -1 marks a descending leaf
    std::unique_ptr<SkeinTreeNode> switched, smoothed;
    int leaf_components = 0;
    int leaf_writhe = 0;
};

SkeinTreeNode skein_tree(const LinkDiagram& d, int max_crossings = 10);
json tree_to_json(const SkeinTreeNode& n);

}  // namespace sumn
