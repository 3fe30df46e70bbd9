#include <doctest.h>

#include <random>

#include "treeweight/cnf.hpp"
#include "treeweight/parser.hpp"
#include "test_support.hpp"

using namespace treeweight;
using namespace testsupport;

namespace {

std::string error_of(const char* text) {
  try {
    parse_dimacs(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

const char* kExample = "c sample formula\np cnf 3 2\n1 -3 0\n-2 3 0\n";

}  // namespace

TEST_CASE("DIMACS parsing") {
  CnfFormula c = parse_dimacs(kExample);
  CHECK(c.variable_count == 3);
  REQUIRE(c.clauses.size() == 2);
  CHECK(c.clauses[0][0].var == 1);
  CHECK(c.clauses[0][0].positive);
  CHECK(c.clauses[0][1].var == 3);
  CHECK(!c.clauses[0][1].positive);

  // Clauses may share a line or span lines; only the 0 terminates.
  CnfFormula packed = parse_dimacs("p cnf 2 2\n1 0 2 0\n");
  CHECK(packed.clauses.size() == 2);
  CnfFormula split = parse_dimacs("p cnf 2 1\n1\n2 0\n");
  REQUIRE(split.clauses.size() == 1);
  CHECK(split.clauses[0].size() == 2);
}

TEST_CASE("DIMACS error taxonomy") {
  CHECK(error_of("1 0\n").find("before the 'p cnf' header") != std::string::npos);
  CHECK(error_of("").find("missing 'p cnf' header") != std::string::npos);
  CHECK(error_of("p cnf 1 1\np cnf 1 1\n1 0\n").find("second 'p' header") != std::string::npos);
  CHECK(error_of("p dnf 1 1\n1 0\n").find("malformed header") != std::string::npos);
  CHECK(error_of("p cnf 1 1\n0\n").find("empty clause") != std::string::npos);
  CHECK(error_of("p cnf 1 1\n2 0\n").find("literal 2 out of range") != std::string::npos);
  CHECK(error_of("p cnf 1 1\n-2 0\n").find("literal -2 out of range") != std::string::npos);
  CHECK(error_of("p cnf 1 1\n1\n").find("not terminated") != std::string::npos);
  CHECK(error_of("p cnf 1 2\n1 0\n").find("declares 2 clauses, found 1") != std::string::npos);
  CHECK(error_of("p cnf 1 1\n1 x 0\n").find("unexpected token") != std::string::npos);
}

TEST_CASE("the clause grammar of the example formula, printed in full") {
  Grammar g = cnf_to_grammar(parse_dimacs(kExample));
  CHECK(print_grammar(g) ==
        "C' ::= c(D'1,D'2) ;\n"
        "D'1 ::= d(P1,F2,F3) | d(F1,F2,N3) ;\n"
        "D'2 ::= d(F1,N2,F3) | d(F1,F2,P3) ;\n"
        "P1 ::= y1 ;\n"
        "N1 ::= z1 ;\n"
        "F1 ::= y1 | z1 ;\n"
        "P2 ::= y2 ;\n"
        "N2 ::= z2 ;\n"
        "F2 ::= y2 | z2 ;\n"
        "P3 ::= y3 ;\n"
        "N3 ::= z3 ;\n"
        "F3 ::= y3 | z3 ;\n");

  GrammarStats st = stats(g);
  CHECK(st.nt == 12);   // 1 + m + 3n
  CHECK(st.al == 17);   // 1 + total literals + 4n
  CHECK(st.ar == 3);    // max(m, n)
  CHECK(validate(g).empty());

  for (const char* v : {"y1", "z1", "y2", "z2", "y3", "z3"}) {
    CHECK(g.signature[*g.signature.find(v)].is_variable);
  }
  CHECK(!g.signature[*g.signature.find("c")].is_variable);
}

TEST_CASE("a single positive unit clause encodes to the minimal grammar") {
  Grammar g = cnf_to_grammar(parse_dimacs("p cnf 1 1\n1 0\n"));
  CHECK(print_grammar(g) ==
        "C' ::= c(D'1) ;\n"
        "D'1 ::= d(P1) ;\n"
        "P1 ::= y1 ;\n"
        "N1 ::= z1 ;\n"
        "F1 ::= y1 | z1 ;\n");
}

TEST_CASE("encoded grammar sizes follow the closed forms") {
  std::mt19937_64 rng(4213);
  for (int i = 0; i < 50; ++i) {
    CnfFormula c = random_cnf(rng, 6, 8);
    uint32_t n = c.variable_count;
    uint32_t m = static_cast<uint32_t>(c.clauses.size());
    size_t literals = 0;
    for (const auto& clause : c.clauses) literals += clause.size();

    Grammar g = cnf_to_grammar(c);
    GrammarStats st = stats(g);
    CHECK(st.nt == 1 + m + 3 * n);
    CHECK(st.al == 1 + literals + 4 * n);
    CHECK(st.ar == std::max(m, n));
    CHECK(validate(g).empty());
  }
}

TEST_CASE("deciding the example formula finds the all-true assignment") {
  SatResult r = decide_sat(parse_dimacs(kExample));
  REQUIRE(r.satisfiable);
  CHECK(r.assignment == std::vector<bool>{true, true, true});
  CHECK(eval_cnf(parse_dimacs(kExample), r.assignment));
}

TEST_CASE("a contradiction is reported unsatisfiable") {
  SatResult r = decide_sat(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"));
  CHECK(!r.satisfiable);
  CHECK(r.assignment.empty());
}

TEST_CASE("an empty clause list is trivially satisfiable") {
  CnfFormula c;
  c.variable_count = 2;
  SatResult r = decide_sat(c);
  CHECK(r.satisfiable);
  CHECK(r.assignment == std::vector<bool>{false, false});
  CHECK(eval_cnf(c, r.assignment));
}

TEST_CASE("satisfiability decisions match the truth table") {
  std::mt19937_64 rng(4214);
  int sat_seen = 0, unsat_seen = 0;
  for (int i = 0; i < 120; ++i) {
    CnfFormula c = random_cnf(rng, 4, 6);
    bool expected = false;
    for (uint32_t bits = 0; bits < (1u << c.variable_count); ++bits) {
      std::vector<bool> assignment(c.variable_count);
      for (uint32_t j = 0; j < c.variable_count; ++j) assignment[j] = (bits >> j) & 1;
      if (eval_cnf(c, assignment)) {
        expected = true;
        break;
      }
    }

    SatResult r = decide_sat(c);
    CHECK(r.satisfiable == expected);
    if (r.satisfiable) {
      ++sat_seen;
      CHECK(eval_cnf(c, r.assignment));  // the decoded assignment really works
    } else {
      ++unsat_seen;
    }
  }
  CHECK(sat_seen > 10);
  CHECK(unsat_seen > 10);
}

TEST_CASE("DIMACS loading reports the path") {
  try {
    load_dimacs("/nonexistent/x.cnf");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/x.cnf") != std::string::npos);
  }
}
