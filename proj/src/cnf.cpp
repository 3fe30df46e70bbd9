#include "treeweight/cnf.hpp"

#include <sstream>

#include "treeweight/parser.hpp"

namespace treeweight {

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula cnf;
  uint32_t declared_clauses = 0;
  bool have_header = false;

  std::vector<Diagnostic> errors;
  std::vector<Literal> clause;
  uint32_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    ++line_no;

    std::istringstream in(line);
    std::string first;
    if (in >> first && first != "c") {
      if (first == "p") {
        std::string kind;
        if (have_header) {
          errors.push_back({"second 'p' header", {line_no, 1}});
        } else if (!(in >> kind >> cnf.variable_count >> declared_clauses) || kind != "cnf") {
          errors.push_back({"malformed header, expected 'p cnf <vars> <clauses>'", {line_no, 1}});
        }
        have_header = true;
      } else if (!have_header) {
        errors.push_back({"clause data before the 'p cnf' header", {line_no, 1}});
        break;
      } else {
        in.clear();
        in.str(line);
        long long lit;
        while (in >> lit) {
          if (lit == 0) {
            if (clause.empty()) {
              errors.push_back({"empty clause", {line_no, 1}});
            } else {
              cnf.clauses.push_back(std::move(clause));
              clause.clear();
            }
          } else {
            uint64_t var = static_cast<uint64_t>(lit < 0 ? -lit : lit);
            if (var > cnf.variable_count) {
              errors.push_back({"literal " + std::to_string(lit) + " out of range, " +
                                    std::to_string(cnf.variable_count) + " variables declared",
                                {line_no, 1}});
            } else {
              clause.push_back({static_cast<uint32_t>(var), lit > 0});
            }
          }
        }
        if (!in.eof()) {
          errors.push_back({"unexpected token in clause data", {line_no, 1}});
        }
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (!have_header) errors.push_back({"missing 'p cnf' header"});
  if (!clause.empty()) errors.push_back({"last clause is not terminated by 0"});
  if (errors.empty() && cnf.clauses.size() != declared_clauses) {
    errors.push_back({"header declares " + std::to_string(declared_clauses) +
                      " clauses, found " + std::to_string(cnf.clauses.size())});
  }
  if (!errors.empty()) throw InputError(std::move(errors));
  return cnf;
}

CnfFormula load_dimacs(const std::string& path) {
  try {
    return parse_dimacs(read_file(path));
  } catch (InputError& e) {
    std::vector<Diagnostic> tagged;
    for (const Diagnostic& d : e.diagnostics()) {
      tagged.push_back({path + ": " + d.message, d.pos});
    }
    throw InputError(std::move(tagged));
  }
}

Grammar cnf_to_grammar(const CnfFormula& c) {
  const uint32_t n = c.variable_count;
  const uint32_t m = static_cast<uint32_t>(c.clauses.size());

  Grammar g;
  SymbolId sym_c = g.signature.add("c", m);
  SymbolId sym_d = g.signature.add("d", n);
  std::vector<SymbolId> sym_y(n), sym_z(n);
  for (uint32_t j = 0; j < n; ++j) {
    sym_y[j] = g.signature.add("y" + std::to_string(j + 1), 0);
    sym_z[j] = g.signature.add("z" + std::to_string(j + 1), 0);
    g.signature.mark_variable(sym_y[j]);
    g.signature.mark_variable(sym_z[j]);
  }

  // Nonterminal layout: C', the D'_i, then P_j/N_j/F_j per variable.
  NtId nt_c = 0;
  g.nonterminals.push_back("C'");
  std::vector<NtId> nt_d(m), nt_p(n), nt_n(n), nt_f(n);
  for (uint32_t i = 0; i < m; ++i) {
    nt_d[i] = g.nt_count();
    g.nonterminals.push_back("D'" + std::to_string(i + 1));
  }
  for (uint32_t j = 0; j < n; ++j) {
    nt_p[j] = g.nt_count();
    g.nonterminals.push_back("P" + std::to_string(j + 1));
    nt_n[j] = g.nt_count();
    g.nonterminals.push_back("N" + std::to_string(j + 1));
    nt_f[j] = g.nt_count();
    g.nonterminals.push_back("F" + std::to_string(j + 1));
  }
  g.rules.resize(g.nt_count());

  g.rules[nt_c].push_back({sym_c, nt_d});

  for (uint32_t i = 0; i < m; ++i) {
    for (const Literal& lit : c.clauses[i]) {
      Alternative alt;
      alt.symbol = sym_d;
      alt.args.assign(nt_f.begin(), nt_f.end());
      alt.args[lit.var - 1] = lit.positive ? nt_p[lit.var - 1] : nt_n[lit.var - 1];
      g.rules[nt_d[i]].push_back(std::move(alt));
    }
  }
  for (uint32_t j = 0; j < n; ++j) {
    g.rules[nt_p[j]].push_back({sym_y[j], {}});
    g.rules[nt_n[j]].push_back({sym_z[j], {}});
    g.rules[nt_f[j]].push_back({sym_y[j], {}});
    g.rules[nt_f[j]].push_back({sym_z[j], {}});
  }
  return g;
}

SatResult decide_sat(const CnfFormula& c, size_t max_family_size) {
  SatResult result;
  if (c.clauses.empty()) {  // empty conjunction: trivially true
    result.satisfiable = true;
    result.assignment.assign(c.variable_count, false);
    return result;
  }

  Grammar g = cnf_to_grammar(c);
  VarSetSolve solved = solve_var_sets(g, max_family_size);
  const VarSetFamily& family = solved.families[0];  // C' is nonterminal 0
  if (family.empty()) return result;                // cannot happen for valid CNFs

  const VarSet& v = family.front();  // canonical order puts minimum cardinality first
  if (v.count() != c.variable_count) return result;

  result.satisfiable = true;
  result.assignment.assign(c.variable_count, false);
  for (uint32_t j = 0; j < c.variable_count; ++j) {
    uint32_t bit = solved.universe.index.at("y" + std::to_string(j + 1));
    result.assignment[j] = v.test(bit);
  }
  return result;
}

}  // namespace treeweight
