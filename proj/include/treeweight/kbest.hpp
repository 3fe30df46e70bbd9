#pragma once

#include <algorithm>
#include <memory>
#include <queue>
#include <span>
#include <vector>

#include "treeweight/algebra.hpp"
#include "treeweight/grammar.hpp"
#include "treeweight/solver.hpp"
#include "treeweight/term.hpp"

namespace treeweight {

template <WeightAlgebra A>
struct Enumerated {
  TermPtr term;
  typename A::Weight weight;
};

namespace detail {

// Partial derivation tree: leaves may still be nonterminal holes. Nodes
// are immutable and shared; each caches its hole count and its completion
// estimate = weight with every hole valued at the solved minimum of its
// nonterminal. Monotonic + increasing algebra laws make the estimate a
// lower bound for every completion, so best-first search is exact.
template <WeightAlgebra A>
struct PNode {
  using W = typename A::Weight;
  using Ptr = std::shared_ptr<const PNode>;

  bool is_hole = false;
  NtId hole = 0;
  SymbolId symbol = 0;
  std::vector<Ptr> children;
  size_t holes = 0;
  W est;

  static Ptr make_hole(NtId n, const W& w) {
    auto p = std::make_shared<PNode>();
    p->is_hole = true;
    p->hole = n;
    p->holes = 1;
    p->est = w;
    return p;
  }

  static Ptr make_node(const A& alg, SymbolId f, std::vector<Ptr> kids) {
    auto p = std::make_shared<PNode>();
    p->symbol = f;
    p->children = std::move(kids);
    std::vector<W> ests;
    ests.reserve(p->children.size());
    for (const Ptr& c : p->children) {
      p->holes += c->holes;
      ests.push_back(c->est);
    }
    p->est = alg.apply(f, std::span<const W>(ests));
    return p;
  }
};

template <WeightAlgebra A>
TermPtr pnode_to_term(const Grammar& g, const PNode<A>& n) {
  std::vector<TermPtr> kids;
  kids.reserve(n.children.size());
  for (const auto& c : n.children) kids.push_back(pnode_to_term(g, *c));
  return Term::make(g.signature[n.symbol].name, std::move(kids));
}

// Replaces the leftmost hole, cloning only the spine above it.
template <WeightAlgebra A>
typename PNode<A>::Ptr replace_leftmost(const A& alg, const typename PNode<A>::Ptr& node,
                                        const typename PNode<A>::Ptr& replacement) {
  if (node->is_hole) return replacement;
  std::vector<typename PNode<A>::Ptr> kids = node->children;
  for (size_t i = 0; i < kids.size(); ++i) {
    if (kids[i]->holes > 0) {
      kids[i] = replace_leftmost(alg, kids[i], replacement);
      break;
    }
  }
  return PNode<A>::make_node(alg, node->symbol, std::move(kids));
}

template <WeightAlgebra A>
NtId leftmost_hole(const PNode<A>& node) {
  if (node.is_hole) return node.hole;
  for (const auto& c : node.children) {
    if (c->holes > 0) return leftmost_hole(*c);
  }
  return 0;  // unreachable when holes > 0
}

}  // namespace detail

// Up to k distinct terms of L(target) in nondecreasing weight order; equal
// weights are ordered lexicographically on preorder symbol sequences under
// signature declaration order. Whole weight classes are resolved before
// anything is emitted, which is what makes ties deterministic; a grammar
// with an infinite equal-weight class therefore exhausts the node budget
// and raises ResourceLimitError instead of returning an arbitrary order.
template <WeightAlgebra A>
std::vector<Enumerated<A>> enumerate_lightest(const Grammar& g, const A& alg, NtId target,
                                              size_t k, size_t node_cap = 1'000'000) {
  using W = typename A::Weight;
  using Ptr = typename detail::PNode<A>::Ptr;
  detail::require_valid(g);

  SolveResult<A> solved = solve_lazy(g, alg);
  std::vector<Enumerated<A>> out;
  if (k == 0 || alg.compare(solved.weights[target], alg.infinity()) == 0) return out;

  auto greater = [&](const Ptr& a, const Ptr& b) { return alg.compare(a->est, b->est) > 0; };
  std::priority_queue<Ptr, std::vector<Ptr>, decltype(greater)> queue(greater);
  size_t budget = node_cap;

  auto push = [&](Ptr p) {
    if (alg.compare(p->est, alg.infinity()) == 0) return;  // can never complete
    if (budget == 0) {
      throw ResourceLimitError("enumeration exceeded the node budget of " +
                               std::to_string(node_cap));
    }
    --budget;
    queue.push(std::move(p));
  };

  auto rank = [&](const std::string& name) { return static_cast<int>(*g.signature.find(name)); };

  push(detail::PNode<A>::make_hole(target, solved.weights[target]));

  while (!queue.empty() && out.size() < k) {
    const W class_weight = queue.top()->est;
    std::vector<TermPtr> ground;
    while (!queue.empty() && alg.compare(queue.top()->est, class_weight) == 0) {
      Ptr cur = queue.top();
      queue.pop();
      if (cur->holes == 0) {
        ground.push_back(detail::pnode_to_term(g, *cur));
        continue;
      }
      NtId h = detail::leftmost_hole(*cur);
      for (const Alternative& alt : g.rules[h]) {
        std::vector<Ptr> kids;
        kids.reserve(alt.args.size());
        for (NtId arg : alt.args) {
          kids.push_back(detail::PNode<A>::make_hole(arg, solved.weights[arg]));
        }
        Ptr sub = detail::PNode<A>::make_node(alg, alt.symbol, std::move(kids));
        push(detail::replace_leftmost(alg, cur, sub));
      }
    }

    // Fixed arities make preorder symbol sequences prefix-free, so the
    // lexicographic comparison alone is total on distinct terms.
    std::sort(ground.begin(), ground.end(), [&](const TermPtr& a, const TermPtr& b) {
      return preorder_compare(*a, *b, rank) < 0;
    });
    for (size_t i = 0; i < ground.size() && out.size() < k; ++i) {
      if (i > 0 && term_equal(ground[i - 1], ground[i])) continue;  // ambiguous derivations
      out.push_back({ground[i], class_weight});
    }
  }
  return out;
}

}  // namespace treeweight
