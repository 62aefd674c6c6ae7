#ifndef NNIL_BETA_HPP
#define NNIL_BETA_HPP

#include <optional>
#include <utility>

#include "nnil/kripke.hpp"
#include "nnil/universal.hpp"

namespace nnil {

// beta(w) = /\ prop(w) -> \/ notprop(w) \/ \/ beta(w_i) over the immediate
// successors w_i; empty conjunction = true, empty disjunction = false.
// Duplicate successor disjuncts (isomorphic subtrees) appear once. With
// simplify set, a true antecedent is dropped.
Formula beta_node(const KripkeModel& n, const WorldId& w, bool simplify = false);
// beta at the root.
Formula beta_model(const KripkeModel& n, bool simplify = false);

// Monotonic map from the unraveling of n into m; exists iff m does not
// model beta(n).
std::optional<NodeMap> refutation_witness(const KripkeModel& n, const KripkeModel& m);

// Color-consistent map from the unraveling of n into fr, plus the
// synthesized valuation on which the refutation is realized; empty iff
// beta(n) is valid on fr.
std::optional<std::pair<NodeMap, KripkeModel>> frame_refutes(const KripkeModel& n,
                                                             const KripkeFrame& fr);

// beta_plus(w) = /\ { beta(v) : not (T_w <= T_v) }; true at T_u iff
// T_w <= T_u.
Formula beta_plus_node(const UniversalModel& un, int w);
// Same by tree; throws ModelError when tw is not a node of un.
Formula beta_plus_node(const UniversalModel& un, const Tree& tw);
// beta_plus(U) = /\ { beta(v) : v not in U }; defines exactly the upset U.
Formula beta_plus_upset(const UniversalModel& un, const Bitset& u);

// Pointed models agree on all NNIL formulas iff their canonical trees
// coincide.
bool nnil_equivalent(const KripkeModel& m, const WorldId& w, const KripkeModel& n,
                     const WorldId& u);

// NNIL formula equivalent to f over n variables (n <= 2), certified by the
// prover; empty when f has no NNIL equivalent.
std::optional<Formula> is_nnil_expressible(const Formula& f, int n);

}  // namespace nnil

#endif
