#pragma once

#include <vector>

#include "treeweight/antichain.hpp"
#include "treeweight/grammar.hpp"

namespace treeweight {

struct VarSetSolve {
  VarUniverse universe;
  std::vector<VarSetFamily> families;  // by nonterminal id; empty = empty language
};

// Least fixpoint of the variable-set weights: a nullary variable symbol
// yields its singleton {{x}}, any other symbol the pointwise union of its
// argument families, each alternative's contribution minimized, and every
// nonterminal keeps the subset-minimal family of all its alternatives.
// Synchronous iteration (cycle k+1 reads only cycle-k families) until
// nothing changes; the antichain lattice over finitely many variables is
// finite, so this terminates. Families exceeding max_family_size raise
// ResourceLimitError. Variable symbols must be nullary.
VarSetSolve solve_var_sets(const Grammar& g, size_t max_family_size = size_t{1} << 20);

}  // namespace treeweight
