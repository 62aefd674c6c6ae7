#ifndef NNIL_MORPHISMS_HPP
#define NNIL_MORPHISMS_HPP

#include <functional>
#include <optional>

#include "nnil/kripke.hpp"

namespace nnil {

// Order preservation (wRu implies f(w)R'f(u)) + color preservation.
// Throws on a map that is not total on src or maps outside dst.
bool is_monotonic(const NodeMap& f, const KripkeModel& src, const KripkeModel& dst);

// Complete backtracking search for a monotonic map src -> dst. Worlds of src
// are assigned in a topological order (by longest chain below, ties by
// index); candidate targets are tried in lexicographic world-id order, so
// the witness found is deterministic.
std::optional<NodeMap> find_monotonic(const KripkeModel& src, const KripkeModel& dst);

// Enumerates every monotonic map src -> dst. Stops early when the callback
// returns false.
void for_each_monotonic(const KripkeModel& src, const KripkeModel& dst,
                        const std::function<bool(const NodeMap&)>& fn);
std::size_t count_monotonic(const KripkeModel& src, const KripkeModel& dst);

// n <= m iff m maps monotonically into n.
bool leq(const KripkeModel& n, const KripkeModel& m);
bool equiv(const KripkeModel& n, const KripkeModel& m);

// Complete search for an order-preserving map t -> fr such that
// f(w) R f(u) implies col(w) <= col(u) for ALL node pairs of t.
std::optional<NodeMap> find_color_consistent(const Tree& t, const KripkeFrame& fr);

// V(p) = union of R(f(w)) over tree nodes w where p holds. Requires f to be
// a color-consistent order-preserving map from t into fr; the result then
// satisfies is_monotonic(f, t.model(), result).
KripkeModel synthesize_valuation(const NodeMap& f, const Tree& t, const KripkeFrame& fr);

}  // namespace nnil

#endif
