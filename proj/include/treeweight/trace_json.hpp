#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeweight/grammar.hpp"
#include "treeweight/solver.hpp"

namespace treeweight {

// Solver run with all weights rendered to text and delta-coded trace sets
// expanded to full per-cycle snapshots, ready for export.
struct RenderedCycle {
  uint64_t cycle = 0;
  std::vector<std::pair<std::string, std::string>> changes;  // (nonterminal, weight)
  // Lazy solver only: front = heap members after this cycle's evaluations
  // and before the pops; minimals = popped this cycle; done = cumulative
  // including this cycle's pops.
  std::vector<std::string> front, minimals, done;
};

struct RenderedSolve {
  std::string algorithm;
  std::vector<std::string> nonterminals;
  std::vector<RenderedCycle> cycles;
  std::vector<std::pair<std::string, std::string>> weights;
  // Optional (nonterminal, term) pairs; empty-language nonterminals are
  // left out. Empty vector = section omitted from the document.
  std::vector<std::pair<std::string, std::string>> witnesses;
  SolverStats stats;
  bool lazy = false;
};

template <WeightAlgebra A>
RenderedSolve render_solve(const Grammar& g, const A& alg, const SolveResult<A>& r,
                           std::string algorithm) {
  RenderedSolve out;
  out.algorithm = std::move(algorithm);
  out.nonterminals = g.nonterminals;
  out.lazy = r.has_done_order;
  out.stats = r.stats;

  std::vector<bool> in_front(g.nt_count(), false);
  std::vector<bool> is_done(g.nt_count(), false);
  uint64_t k = 0;
  for (const TraceCycle<A>& c : r.trace.cycles) {
    RenderedCycle rc;
    rc.cycle = ++k;
    for (const auto& [n, w] : c.changes) {
      rc.changes.push_back({g.nonterminals[n], alg.render(w)});
    }
    if (out.lazy) {
      for (NtId n : c.entered_front) in_front[n] = true;
      for (NtId n = 0; n < g.nt_count(); ++n) {
        if (in_front[n]) rc.front.push_back(g.nonterminals[n]);
      }
      for (NtId n : c.minimals) {
        in_front[n] = false;
        is_done[n] = true;
        rc.minimals.push_back(g.nonterminals[n]);
      }
      for (NtId n = 0; n < g.nt_count(); ++n) {
        if (is_done[n]) rc.done.push_back(g.nonterminals[n]);
      }
    }
    out.cycles.push_back(std::move(rc));
  }
  for (NtId n = 0; n < g.nt_count(); ++n) {
    out.weights.push_back({g.nonterminals[n], alg.render(r.weights[n])});
  }
  return out;
}

// Pretty-printed JSON document; the schema is documented in the README.
std::string trace_to_json(const RenderedSolve& r);

}  // namespace treeweight
