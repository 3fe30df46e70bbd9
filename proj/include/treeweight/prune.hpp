#pragma once

#include <vector>

#include "treeweight/algebra.hpp"
#include "treeweight/grammar.hpp"
#include "treeweight/solver.hpp"

namespace treeweight {

// Drops every flagged nonterminal and every alternative mentioning one.
// When the flags mark exactly the infinite-weight nonterminals, surviving
// nonterminals keep their languages unchanged.
Grammar prune_empty(const Grammar& g, const std::vector<bool>& empty);

// Flags weight = infinity, which holds iff the language is empty —
// independent of which law-satisfying algebra produced the result.
template <WeightAlgebra A>
std::vector<bool> empty_nonterminals(const A& alg, const SolveResult<A>& solved) {
  std::vector<bool> empty(solved.weights.size());
  for (size_t n = 0; n < solved.weights.size(); ++n) {
    empty[n] = alg.compare(solved.weights[n], alg.infinity()) == 0;
  }
  return empty;
}

}  // namespace treeweight
