#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "treeweight/grammar.hpp"
#include "treeweight/term.hpp"

namespace treeweight {

// Weight domain where every ground term is its own weight, so the solved
// value of a nonterminal is the least term of its language. The order --
// smaller size first, ties broken by lexicographic comparison of the
// preorder symbol sequences under a fixed precedence -- is a total
// simplification ordering: it is well-founded, contains the subterm
// relation, and is closed under contexts. A null pointer plays infinity.
class MinTermAlgebra {
 public:
  using Weight = TermPtr;

  // Precedence lists symbol names, most significant first; must cover the
  // signature (throws InputError otherwise). The one-argument form uses
  // the signature's declaration order.
  MinTermAlgebra(const Signature& sig, const std::vector<std::string>& precedence);
  explicit MinTermAlgebra(const Signature& sig);

  TermPtr infinity() const { return nullptr; }
  int compare(const TermPtr& a, const TermPtr& b) const;
  TermPtr apply(SymbolId f, std::span<const TermPtr> args) const;
  std::string render(const TermPtr& w) const;

 private:
  std::vector<std::string> symbol_names_;       // by SymbolId
  std::unordered_map<std::string, int> rank_;   // precedence position
};

}  // namespace treeweight
