#ifndef NNIL_FMP_HPP
#define NNIL_FMP_HPP

#include <optional>
#include <vector>

#include "nnil/kripke.hpp"

namespace nnil {

// sub must be an induced submodel of m (validated). True iff every world of
// m reachable from sub has a color twin reachable inside sub: for all
// w in sub and u in m with wRu there is v in sub with wRv, col(v) = col(u).
bool is_color_preserving_submodel(const KripkeModel& sub, const KripkeModel& m);

// Keeps the root and every node whose color strictly exceeds its parent's;
// chains of the result strictly increase in color, so depth <= n+1.
Tree depth_reduce(const Tree& t);
// Same, plus the monotonic surjection onto the result (w goes to the first
// node on its root path sharing w's color).
std::pair<Tree, NodeMap> depth_reduce_with_map(const Tree& t);

// Bottom-up: at each node keep one child per isomorphism type of reduced
// subtree (the first in canonical child order, i.e. the least retained
// path).
Tree width_reduce(const Tree& t);
// Same, plus the monotonic surjection assembled from the isomorphic-copy
// maps.
std::pair<Tree, NodeMap> width_reduce_with_map(const Tree& t);

struct ReduceResult {
    KripkeModel reduced;
    // Monotonic surjection input -> reduced; present for tree inputs only.
    std::optional<NodeMap> onto;
};

// Color-preserving submodel with the same root: depth_reduce then
// width_reduce, applied to the unraveling and projected back along the
// natural map when the input is not itself a tree.
ReduceResult reduce(const KripkeModel& m);

struct FrameNormalForm {
    Formula plus;
    Formula prime;  // plus -> s_f
    VarContext extended;
};

// Fresh variable s_psi per compound subformula (atoms and constants stand
// for themselves), defined by (s_a * s_b) <-> s_psi conjuncts in plus.
// Fresh names hash the subformula's printed form.
FrameNormalForm frame_normal_form(const Formula& f, const VarContext& ctx);

// f holds at every world under every persistent valuation of nvars
// variables, by exhaustive enumeration over upset vectors.
bool frame_valid(const KripkeFrame& fr, const Formula& f, int nvars);

// Exhaustive search over rooted frames up to isomorphism (maxWorlds <= 4):
// on every frame validating all axioms, look for a valuation refuting f.
std::optional<KripkeModel> find_countermodel(const std::vector<Formula>& axioms,
                                             const Formula& f, const VarContext& ctx,
                                             int maxWorlds);

}  // namespace nnil

#endif
