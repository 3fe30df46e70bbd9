#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "treeweight/grammar.hpp"
#include "treeweight/solver.hpp"
#include "treeweight/term.hpp"

namespace treeweight {

// Builds, for every nonterminal with finite weight, a term of its language
// achieving exactly that weight; nullptr marks empty languages. Requires a
// lazy-solver result: the done order is what guarantees termination. For
// each nonterminal the first rule-order alternative is chosen whose
// arguments were all done strictly earlier and whose applied weight equals
// the solved weight; its argument witnesses are already minimal, so the
// built term is minimal at every subterm.
template <WeightAlgebra A>
std::vector<TermPtr> extract_witnesses(const Grammar& g, const A& alg,
                                       const SolveResult<A>& solved) {
  using W = typename A::Weight;
  if (!solved.has_done_order) {
    throw std::logic_error("extract_witnesses needs a lazy solver result (done order)");
  }
  const uint32_t nt = g.nt_count();
  std::vector<TermPtr> witness(nt);

  // Done cycles strictly decrease from a nonterminal to the arguments of
  // its chosen alternative, so building in done order is bottom-up.
  std::vector<NtId> order;
  for (NtId n = 0; n < nt; ++n) {
    if (solved.done_cycle[n] > 0) order.push_back(n);
  }
  std::sort(order.begin(), order.end(), [&](NtId a, NtId b) {
    return solved.done_cycle[a] != solved.done_cycle[b]
               ? solved.done_cycle[a] < solved.done_cycle[b]
               : a < b;
  });

  std::vector<W> arg_weights;
  for (NtId n : order) {
    const uint32_t my_cycle = solved.done_cycle[n];
    for (const Alternative& alt : g.rules[n]) {
      bool args_done_earlier = true;
      for (NtId arg : alt.args) {
        if (solved.done_cycle[arg] == 0 || solved.done_cycle[arg] >= my_cycle) {
          args_done_earlier = false;
          break;
        }
      }
      if (!args_done_earlier) continue;
      arg_weights.clear();
      for (NtId arg : alt.args) arg_weights.push_back(solved.weights[arg]);
      W w = alg.apply(alt.symbol, std::span<const W>(arg_weights));
      if (alg.compare(w, solved.weights[n]) != 0) continue;
      std::vector<TermPtr> children;
      children.reserve(alt.args.size());
      for (NtId arg : alt.args) children.push_back(witness[arg]);
      witness[n] = Term::make(g.signature[alt.symbol].name, std::move(children));
      break;
    }
    if (!witness[n]) {
      throw std::logic_error("no witness alternative for '" + g.nonterminals[n] +
                             "': solver state is inconsistent");
    }
  }
  return witness;
}

}  // namespace treeweight
