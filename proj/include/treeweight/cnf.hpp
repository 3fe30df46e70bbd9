#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treeweight/grammar.hpp"
#include "treeweight/varsets.hpp"

namespace treeweight {

struct Literal {
  uint32_t var = 0;  // 1-based
  bool positive = true;
};

struct CnfFormula {
  uint32_t variable_count = 0;
  std::vector<std::vector<Literal>> clauses;  // each nonempty
};

// DIMACS cnf: 'c' comment lines, one "p cnf <vars> <clauses>" header,
// then whitespace-separated literals with 0 terminating each clause.
// Clause count must match the header; empty clauses and out-of-range
// variables are errors (InputError).
CnfFormula parse_dimacs(std::string_view text);
CnfFormula load_dimacs(const std::string& path);

// Encodes satisfiability as a variable-set weight problem. For a CNF with
// m clauses over variables x_1..x_n the grammar is
//
//   C'   ::= c(D'_1,...,D'_m) ;
//   D'_i ::= one alternative d(F_1,..,P_j,..,F_n) per positive literal x_j
//            and d(F_1,..,N_j,..,F_n) per negative literal (at position j)
//   P_j  ::= y_j ;      N_j ::= z_j ;      F_j ::= y_j | z_j ;
//
// with y_j, z_j flagged as variables: 1+m+3n rules and 1+sum(clause
// sizes)+4n alternatives. Minimal members of the C' family with exactly n
// variables pick one of y_j/z_j per j, i.e. encode assignments that
// satisfy every clause.
Grammar cnf_to_grammar(const CnfFormula& c);

struct SatResult {
  bool satisfiable = false;
  std::vector<bool> assignment;  // assignment[j-1] is the value of x_j
};

// Decides satisfiability through the grammar encoding: solve the variable
// sets, take a minimum-cardinality member v of the C' family; satisfiable
// iff |v| = n, and then x_j is true iff y_j is in v. A formula with no
// clauses is trivially satisfiable (the encoding needs m >= 1).
SatResult decide_sat(const CnfFormula& c, size_t max_family_size = size_t{1} << 20);

}  // namespace treeweight
