#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "treeweight/diagnostics.hpp"
#include "treeweight/term.hpp"

namespace treeweight {

using SymbolId = uint32_t;
using NtId = uint32_t;

struct Symbol {
  std::string name;
  uint32_t arity = 0;
  // Nullary symbols may be flagged as variables; only the variable-set
  // solver looks at this.
  bool is_variable = false;
};

// Function symbols with fixed arities. Declaration order is meaningful: it
// is the default precedence for term orderings and the tie-break order for
// k-best enumeration.
class Signature {
 public:
  SymbolId add(std::string name, uint32_t arity);
  std::optional<SymbolId> find(std::string_view name) const;

  const Symbol& operator[](SymbolId id) const { return symbols_[id]; }
  Symbol& operator[](SymbolId id) { return symbols_[id]; }
  uint32_t size() const { return static_cast<uint32_t>(symbols_.size()); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  void mark_variable(SymbolId id) { symbols_[id].is_variable = true; }

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

// One right-hand-side choice f(N_1,...,N_n); args index into the grammar's
// nonterminal table and must have length = arity of the symbol.
struct Alternative {
  SymbolId symbol = 0;
  std::vector<NtId> args;
};

// Regular tree grammar: one rule (= ordered alternative list) per
// nonterminal. A rule with zero alternatives denotes the empty language.
// Fields are open; validate() re-checks all structural invariants, so
// hand-built instances can be diagnosed instead of crashing.
struct Grammar {
  Signature signature;
  std::vector<std::string> nonterminals;       // rule order as written
  std::vector<std::vector<Alternative>> rules; // rules[nt]

  std::optional<NtId> find_nonterminal(std::string_view name) const;
  uint32_t nt_count() const { return static_cast<uint32_t>(nonterminals.size()); }
  size_t alternative_count() const;
};

struct GrammarStats {
  uint32_t nt = 0;  // nonterminal count
  uint32_t al = 0;  // total alternatives
  uint32_t ar = 0;  // maximal arity occurring in any alternative
};

GrammarStats stats(const Grammar& g);

// Structural invariant check; empty result iff the grammar is well-formed.
// Each diagnostic names the violated invariant and its location.
std::vector<Diagnostic> validate(const Grammar& g);

struct Occurrence {
  NtId owner = 0;        // nonterminal whose rule contains the occurrence
  uint32_t alt_index = 0;  // position of the alternative in that rule
  uint32_t arg_pos = 0;    // argument position inside the alternative
};

// Reverse index: for each nonterminal, every place it occurs on a
// right-hand side. One grammar pass; the solvers use it to find the
// alternatives affected by a value change.
struct OccurrenceIndex {
  std::vector<std::vector<Occurrence>> at;  // at[nt]

  size_t total_entries() const;
};

OccurrenceIndex build_occurrence_index(const Grammar& g);

// True iff t is derivable from nonterminal n. Bottom-up: computes the set
// of nonterminals deriving each subterm. Throws InputError if t uses a
// symbol not in the signature (or with the wrong arity).
bool membership_check(const Grammar& g, NtId n, const Term& t);

// Renders in the .rtg file format; reparsing yields a structurally equal
// grammar (variable flags are not part of the format).
std::string print_grammar(const Grammar& g);

}  // namespace treeweight
