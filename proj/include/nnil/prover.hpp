#ifndef NNIL_PROVER_HPP
#define NNIL_PROVER_HPP

#include <vector>

#include "nnil/formula.hpp"

namespace nnil {

// Decides assumptions |- goal in IPC by contraction-free root-first sequent
// search (terminating without loop checks; left-implication rules keyed on
// the antecedent's head connective).
bool proves(const std::vector<Formula>& assumptions, const Formula& goal);

// |- f <-> g.
bool equivalent(const Formula& f, const Formula& g);

}  // namespace nnil

#endif
