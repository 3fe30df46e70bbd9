#include "test_support.hpp"

#include <algorithm>

namespace testsupport {

std::string data_dir() { return TESTDATA_DIR; }

std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

Grammar family_grammar(uint32_t n_max) {
  Grammar g;
  SymbolId a = g.signature.add("a", 0);
  SymbolId q = g.signature.add("q", 1);
  SymbolId j = g.signature.add("j", 1);
  SymbolId p = g.signature.add("p", 1);

  // declaration order matches the data files: Q0, then Qi, Pi per level
  std::vector<NtId> q_nt(n_max + 1), p_nt(n_max + 1);
  g.nonterminals.push_back("Q0");
  q_nt[0] = 0;
  for (uint32_t i = 1; i <= n_max; ++i) {
    q_nt[i] = static_cast<NtId>(g.nonterminals.size());
    g.nonterminals.push_back("Q" + std::to_string(i));
    p_nt[i] = static_cast<NtId>(g.nonterminals.size());
    g.nonterminals.push_back("P" + std::to_string(i));
  }
  g.rules.resize(g.nt_count());
  g.rules[q_nt[0]].push_back({a, {}});
  for (uint32_t i = 1; i <= n_max; ++i) {
    g.rules[q_nt[i]].push_back({q, {p_nt[i]}});
    g.rules[q_nt[i]].push_back({j, {q_nt[i - 1]}});
    g.rules[p_nt[i]].push_back({p, {q_nt[i - 1]}});
  }
  return g;
}

AffineCostSpec family_costs() {
  AffineCostSpec spec;
  spec.rows["a"] = {0, {}};
  spec.rows["q"] = {0, {1}};
  spec.rows["p"] = {0, {2}};
  spec.rows["j"] = {1, {2}};
  return spec;
}

Grammar random_grammar(std::mt19937_64& rng, uint32_t max_nt, uint32_t max_al,
                       uint32_t max_ar) {
  auto pick = [&](uint32_t lo, uint32_t hi) {
    return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
  };
  Grammar g;
  uint32_t symbols = pick(2, 6);
  for (uint32_t s = 0; s < symbols; ++s) {
    uint32_t arity = (s == 0) ? 0 : pick(0, max_ar);
    g.signature.add("f" + std::to_string(s), arity);
  }
  uint32_t nt = pick(1, max_nt);
  for (uint32_t n = 0; n < nt; ++n) g.nonterminals.push_back("A" + std::to_string(n));
  g.rules.resize(nt);

  uint32_t alts = pick(1, max_al);
  for (uint32_t i = 0; i < alts; ++i) {
    Alternative alt;
    alt.symbol = pick(0, symbols - 1);
    for (uint32_t k = 0; k < g.signature[alt.symbol].arity; ++k) {
      alt.args.push_back(pick(0, nt - 1));
    }
    g.rules[pick(0, nt - 1)].push_back(std::move(alt));
  }
  return g;
}

AffineCostSpec random_costs(std::mt19937_64& rng, const Signature& sig) {
  auto pick = [&](uint32_t lo, uint32_t hi) {
    return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
  };
  AffineCostSpec spec;
  for (SymbolId f = 0; f < sig.size(); ++f) {
    AffineRow row;
    row.constant = pick(0, 5);
    for (uint32_t i = 0; i < sig[f].arity; ++i) row.coeffs.push_back(pick(1, 3));
    spec.rows[sig[f].name] = std::move(row);
  }
  return spec;
}

Grammar random_dag_grammar(std::mt19937_64& rng, uint32_t max_nt, uint32_t max_al,
                           uint32_t max_ar, uint32_t variable_symbols) {
  auto pick = [&](uint32_t lo, uint32_t hi) {
    return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
  };
  Grammar g;
  uint32_t symbols = pick(2, 5);
  for (uint32_t s = 0; s < symbols; ++s) {
    uint32_t arity = (s == 0) ? 0 : pick(0, max_ar);
    g.signature.add("f" + std::to_string(s), arity);
  }
  for (uint32_t v = 0; v < variable_symbols; ++v) {
    SymbolId s = g.signature.add("x" + std::to_string(v), 0);
    g.signature.mark_variable(s);
  }
  uint32_t nt = pick(1, max_nt);
  for (uint32_t n = 0; n < nt; ++n) g.nonterminals.push_back("A" + std::to_string(n));
  g.rules.resize(nt);

  uint32_t alts = pick(1, max_al);
  for (uint32_t i = 0; i < alts; ++i) {
    NtId owner = pick(0, nt - 1);
    Alternative alt;
    alt.symbol = pick(0, g.signature.size() - 1);
    uint32_t arity = g.signature[alt.symbol].arity;
    if (arity > 0 && owner + 1 >= nt) continue;  // no later nonterminal to reference
    for (uint32_t k = 0; k < arity; ++k) alt.args.push_back(pick(owner + 1, nt - 1));
    g.rules[owner].push_back(std::move(alt));
  }
  return g;
}

std::optional<Enumeration> enumerate_terms(const Grammar& g, uint32_t max_height,
                                           size_t max_terms) {
  Enumeration result;
  result.terms.assign(g.nt_count(), TermSet{});
  size_t total = 0;

  for (uint32_t h = 1; h <= max_height; ++h) {
    bool grew = false;
    // synchronous level: new terms may only use strictly lower levels, so
    // building from the running sets stays within height <= h
    std::vector<std::vector<TermPtr>> additions(g.nt_count());
    for (NtId n = 0; n < g.nt_count(); ++n) {
      for (const Alternative& alt : g.rules[n]) {
        // cartesian product over argument term sets
        std::vector<std::vector<TermPtr>> pools;
        bool feasible = true;
        for (NtId arg : alt.args) {
          if (result.terms[arg].empty()) {
            feasible = false;
            break;
          }
          pools.emplace_back(result.terms[arg].begin(), result.terms[arg].end());
        }
        if (!feasible) continue;
        // Every product combination is a distinct term headed by this
        // symbol, and all land in the same set: when the product alone
        // exceeds the cap the final count must too, so bail before
        // materializing anything.
        size_t combos = 1;
        for (const auto& pool : pools) {
          combos *= pool.size();
          if (combos > max_terms) return std::nullopt;
        }
        std::vector<size_t> idx(pools.size(), 0);
        for (;;) {
          std::vector<TermPtr> children;
          children.reserve(pools.size());
          for (size_t i = 0; i < pools.size(); ++i) children.push_back(pools[i][idx[i]]);
          additions[n].push_back(
              Term::make(g.signature[alt.symbol].name, std::move(children)));
          size_t i = 0;
          while (i < idx.size() && ++idx[i] == pools[i].size()) idx[i++] = 0;
          if (i == idx.size()) break;  // product exhausted (immediately, when nullary)
        }
      }
    }
    for (NtId n = 0; n < g.nt_count(); ++n) {
      for (TermPtr& t : additions[n]) {
        if (result.terms[n].insert(std::move(t)).second) {
          grew = true;
          if (++total > max_terms) return std::nullopt;
        }
      }
    }
    if (!grew) {
      result.complete = true;
      break;
    }
  }
  return result;
}

std::vector<bool> productive_nonterminals(const Grammar& g) {
  std::vector<bool> productive(g.nt_count(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (NtId n = 0; n < g.nt_count(); ++n) {
      if (productive[n]) continue;
      for (const Alternative& alt : g.rules[n]) {
        bool all = true;
        for (NtId arg : alt.args) {
          if (!productive[arg]) {
            all = false;
            break;
          }
        }
        if (all) {
          productive[n] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return productive;
}

bool eval_cnf(const CnfFormula& c, const std::vector<bool>& assignment) {
  for (const auto& clause : c.clauses) {
    bool sat = false;
    for (const Literal& lit : clause) {
      if (assignment[lit.var - 1] == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula random_cnf(std::mt19937_64& rng, uint32_t max_vars, uint32_t max_clauses) {
  auto pick = [&](uint32_t lo, uint32_t hi) {
    return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
  };
  CnfFormula c;
  c.variable_count = pick(1, max_vars);
  uint32_t m = pick(1, max_clauses);
  for (uint32_t i = 0; i < m; ++i) {
    std::vector<Literal> clause;
    uint32_t len = pick(1, 3);
    for (uint32_t l = 0; l < len; ++l) {
      clause.push_back({pick(1, c.variable_count), pick(0, 1) == 1});
    }
    c.clauses.push_back(std::move(clause));
  }
  return c;
}

bool same_grammar(const Grammar& a, const Grammar& b) {
  if (a.nonterminals != b.nonterminals) return false;
  for (NtId n = 0; n < a.nt_count(); ++n) {
    if (a.rules[n].size() != b.rules[n].size()) return false;
    for (size_t i = 0; i < a.rules[n].size(); ++i) {
      const Alternative& x = a.rules[n][i];
      const Alternative& y = b.rules[n][i];
      if (a.signature[x.symbol].name != b.signature[y.symbol].name) return false;
      if (x.args.size() != y.args.size()) return false;
      for (size_t k = 0; k < x.args.size(); ++k) {
        if (a.nonterminals[x.args[k]] != b.nonterminals[y.args[k]]) return false;
      }
    }
  }
  return true;
}

}  // namespace testsupport
