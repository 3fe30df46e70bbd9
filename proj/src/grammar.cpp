#include "treeweight/grammar.hpp"

#include <algorithm>
#include <unordered_set>

namespace treeweight {

SymbolId Signature::add(std::string name, uint32_t arity) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    const Symbol& existing = symbols_[it->second];
    if (existing.arity != arity) {
      throw InputError({Diagnostic{"symbol '" + name + "' redeclared with arity " +
                                   std::to_string(arity) + " (previously " +
                                   std::to_string(existing.arity) + ")"}});
    }
    return it->second;
  }
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(Symbol{name, arity, false});
  index_.emplace(std::move(name), id);
  return id;
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<NtId> Grammar::find_nonterminal(std::string_view name) const {
  for (NtId i = 0; i < nonterminals.size(); ++i) {
    if (nonterminals[i] == name) return i;
  }
  return std::nullopt;
}

size_t Grammar::alternative_count() const {
  size_t n = 0;
  for (const auto& rule : rules) n += rule.size();
  return n;
}

GrammarStats stats(const Grammar& g) {
  GrammarStats s;
  s.nt = g.nt_count();
  for (const auto& rule : g.rules) {
    s.al += static_cast<uint32_t>(rule.size());
    for (const auto& alt : rule) {
      s.ar = std::max(s.ar, static_cast<uint32_t>(alt.args.size()));
    }
  }
  return s;
}

std::vector<Diagnostic> validate(const Grammar& g) {
  std::vector<Diagnostic> out;
  if (g.rules.size() != g.nonterminals.size()) {
    out.push_back({"rule table has " + std::to_string(g.rules.size()) +
                   " entries for " + std::to_string(g.nonterminals.size()) +
                   " nonterminals"});
    return out;  // indices below would be meaningless
  }
  std::unordered_set<std::string> nt_names;
  for (NtId i = 0; i < g.nt_count(); ++i) {
    const std::string& name = g.nonterminals[i];
    if (name.empty()) out.push_back({"nonterminal " + std::to_string(i) + " has an empty name"});
    if (!nt_names.insert(name).second) {
      out.push_back({"duplicate nonterminal '" + name + "'"});
    }
    if (g.signature.find(name)) {
      out.push_back({"name '" + name + "' is used as both a nonterminal and a symbol"});
    }
  }
  for (NtId i = 0; i < g.rules.size() && i < g.nt_count(); ++i) {
    const std::string& owner = g.nonterminals[i];
    for (size_t a = 0; a < g.rules[i].size(); ++a) {
      const Alternative& alt = g.rules[i][a];
      std::string where = "rule for '" + owner + "', alternative " + std::to_string(a + 1);
      if (alt.symbol >= g.signature.size()) {
        out.push_back({where + ": symbol id " + std::to_string(alt.symbol) + " out of range"});
        continue;
      }
      const Symbol& sym = g.signature[alt.symbol];
      if (alt.args.size() != sym.arity) {
        out.push_back({where + ": symbol '" + sym.name + "' has arity " +
                       std::to_string(sym.arity) + " but got " +
                       std::to_string(alt.args.size()) + " arguments"});
      }
      for (NtId arg : alt.args) {
        if (arg >= g.nt_count()) {
          out.push_back({where + ": argument nonterminal id " + std::to_string(arg) +
                         " out of range"});
        }
      }
    }
  }
  return out;
}

size_t OccurrenceIndex::total_entries() const {
  size_t n = 0;
  for (const auto& v : at) n += v.size();
  return n;
}

OccurrenceIndex build_occurrence_index(const Grammar& g) {
  OccurrenceIndex idx;
  idx.at.resize(g.nt_count());
  for (NtId n = 0; n < g.nt_count(); ++n) {
    for (uint32_t a = 0; a < g.rules[n].size(); ++a) {
      const Alternative& alt = g.rules[n][a];
      for (uint32_t p = 0; p < alt.args.size(); ++p) {
        idx.at[alt.args[p]].push_back(Occurrence{n, a, p});
      }
    }
  }
  return idx;
}

namespace {

// Set of nonterminals deriving t, as a bit vector.
std::vector<bool> derivers(const Grammar& g,
                           const std::vector<std::vector<std::pair<NtId, const Alternative*>>>& by_symbol,
                           const Term& t) {
  auto sym = g.signature.find(t.root());
  if (!sym) {
    throw InputError({Diagnostic{"term uses unknown symbol '" + t.root() + "'"}});
  }
  if (g.signature[*sym].arity != t.children().size()) {
    throw InputError({Diagnostic{"term uses symbol '" + t.root() + "' with " +
                                 std::to_string(t.children().size()) +
                                 " arguments, declared arity is " +
                                 std::to_string(g.signature[*sym].arity)}});
  }
  std::vector<std::vector<bool>> child_sets;
  child_sets.reserve(t.children().size());
  for (const auto& c : t.children()) child_sets.push_back(derivers(g, by_symbol, *c));

  std::vector<bool> out(g.nt_count(), false);
  for (const auto& [owner, alt] : by_symbol[*sym]) {
    bool ok = true;
    for (size_t i = 0; i < alt->args.size() && ok; ++i) {
      ok = child_sets[i][alt->args[i]];
    }
    if (ok) out[owner] = true;
  }
  return out;
}

}  // namespace

bool membership_check(const Grammar& g, NtId n, const Term& t) {
  std::vector<std::vector<std::pair<NtId, const Alternative*>>> by_symbol(g.signature.size());
  for (NtId owner = 0; owner < g.nt_count(); ++owner) {
    for (const Alternative& alt : g.rules[owner]) {
      by_symbol[alt.symbol].push_back({owner, &alt});
    }
  }
  return derivers(g, by_symbol, t)[n];
}

std::string print_grammar(const Grammar& g) {
  std::string out;
  for (NtId n = 0; n < g.nt_count(); ++n) {
    out += g.nonterminals[n];
    out += " ::=";
    for (size_t a = 0; a < g.rules[n].size(); ++a) {
      out += (a == 0) ? " " : " | ";
      const Alternative& alt = g.rules[n][a];
      out += g.signature[alt.symbol].name;
      if (!alt.args.empty()) {
        out += '(';
        for (size_t i = 0; i < alt.args.size(); ++i) {
          if (i) out += ',';
          out += g.nonterminals[alt.args[i]];
        }
        out += ')';
      }
    }
    out += " ;\n";
  }
  return out;
}

}  // namespace treeweight
