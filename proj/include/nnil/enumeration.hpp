#ifndef NNIL_ENUMERATION_HPP
#define NNIL_ENUMERATION_HPP

#include <functional>
#include <random>
#include <vector>

#include "nnil/kripke.hpp"

namespace nnil {

// All posets on up to maxWorlds elements up to isomorphism, worlds named
// "w0".."wk", ordered by size then canonical relation code.
std::vector<KripkeFrame> frames_up_to_iso(int maxWorlds, bool rooted_only);

// Every persistent nvars-valuation on fr, in deterministic order. Stops
// early when fn returns false.
void for_each_model(const KripkeFrame& fr, int nvars,
                    const std::function<bool(const KripkeModel&)>& fn);

// Permutation-minimal code of (order, valuation); equal codes = isomorphic
// models.
std::string model_canonical_code(const KripkeModel& m);

// All models on up to maxWorlds worlds over nvars variables, up to
// isomorphism.
std::vector<KripkeModel> models_up_to_iso(int maxWorlds, int nvars, bool rooted_only);

// Seeded generators for the reproducible random corpora.
Tree random_tree(std::mt19937& rng, int max_nodes, int nvars);
KripkeModel random_rooted_model(std::mt19937& rng, int max_worlds, int nvars);
Formula random_formula(std::mt19937& rng, int nvars, int max_depth);

}  // namespace nnil

#endif
