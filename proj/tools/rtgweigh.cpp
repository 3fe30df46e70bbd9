// rtgweigh: weigh nonterminals of a regular tree grammar, prune empty
// languages, enumerate lightest terms, and decide CNF satisfiability via
// the variable-set reduction.
//
// Exit codes: 0 success, 1 input/validation error, 2 resource cap hit.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treeweight/affine.hpp"
#include "treeweight/antichain.hpp"
#include "treeweight/cnf.hpp"
#include "treeweight/kbest.hpp"
#include "treeweight/minterm.hpp"
#include "treeweight/parser.hpp"
#include "treeweight/prune.hpp"
#include "treeweight/solver.hpp"
#include "treeweight/trace_json.hpp"
#include "treeweight/varsets.hpp"
#include "treeweight/witness.hpp"

namespace {

using namespace treeweight;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError({Diagnostic{"cannot write '" + path + "'"}});
  out << text;
  if (!out) throw InputError({Diagnostic{"error while writing '" + path + "'"}});
}

// Runs fn with the algebra named by spec: size, height, minterm (signature
// declaration order as precedence), or affine:PATH.
template <typename Fn>
int with_algebra(const Grammar& g, const std::string& spec, Fn&& fn) {
  if (spec == "size") return fn(SizeAlgebra{});
  if (spec == "height") return fn(HeightAlgebra{});
  if (spec == "minterm") return fn(MinTermAlgebra(g.signature));
  if (spec.rfind("affine:", 0) == 0) {
    return fn(affine_algebra(g.signature, load_costs(spec.substr(7))));
  }
  throw InputError({Diagnostic{"unknown algebra '" + spec +
                               "', expected size, height, minterm, or affine:PATH"}});
}

struct WeighOptions {
  std::string grammar_path;
  std::string algebra = "size";
  std::string algorithm = "lazy";
  std::string trace_path;
  std::string format = "table";
  bool witness = false;
  bool stats = false;
};

int cmd_weigh(const WeighOptions& opt) {
  Grammar g = load_grammar(opt.grammar_path);
  return with_algebra(g, opt.algebra, [&](const auto& alg) {
    const bool record = !opt.trace_path.empty() || opt.format == "structured";

    SolveResult<std::decay_t<decltype(alg)>> solved;
    if (opt.algorithm == "naive") {
      solved = solve_naive(g, alg, StopMode::EarlyStop, record);
    } else if (opt.algorithm == "liquid") {
      solved = solve_liquid_flow(g, alg, record);
    } else {
      solved = solve_lazy(g, alg, record);
    }

    std::vector<TermPtr> witnesses;
    if (opt.witness) {
      // Witness extraction needs the lazy done order; other algorithms
      // get a supplementary lazy run (same weights by agreement).
      if (solved.has_done_order) {
        witnesses = extract_witnesses(g, alg, solved);
      } else {
        witnesses = extract_witnesses(g, alg, solve_lazy(g, alg));
      }
    }

    RenderedSolve rendered = render_solve(g, alg, solved, opt.algorithm);
    for (NtId n = 0; n < g.nt_count(); ++n) {
      if (opt.witness && witnesses[n]) {
        rendered.witnesses.push_back({g.nonterminals[n], to_string(witnesses[n])});
      }
    }

    if (!opt.trace_path.empty()) write_text_file(opt.trace_path, trace_to_json(rendered));

    if (opt.format == "structured") {
      std::cout << trace_to_json(rendered);
    } else {
      for (NtId n = 0; n < g.nt_count(); ++n) {
        std::cout << g.nonterminals[n] << " = " << alg.render(solved.weights[n]);
        if (opt.witness && witnesses[n]) {
          std::cout << "  witness " << to_string(witnesses[n]);
        }
        std::cout << "\n";
      }
      if (opt.stats) {
        std::cout << "cycles = " << solved.stats.cycles << "\n"
                  << "alternativeEvaluations = " << solved.stats.alternative_evaluations
                  << "\n";
        if (solved.has_done_order) {
          std::cout << "heapOperations = " << solved.stats.heap_operations << "\n";
        }
        uint64_t total_changes = 0;
        for (uint32_t c : solved.stats.value_changes) total_changes += c;
        std::cout << "valueChanges = " << total_changes << "\n";
      }
    }
    return 0;
  });
}

int cmd_prune(const std::string& grammar_path, const std::string& out_path) {
  Grammar g = load_grammar(grammar_path);
  SizeAlgebra size_alg;  // emptiness is algebra-independent
  SolveResult<SizeAlgebra> solved = solve_lazy(g, size_alg);
  Grammar pruned = prune_empty(g, empty_nonterminals(size_alg, solved));
  write_text_file(out_path, print_grammar(pruned));
  return 0;
}

int cmd_enumerate(const std::string& grammar_path, const std::string& algebra,
                  const std::string& nonterminal, size_t count, size_t node_cap) {
  Grammar g = load_grammar(grammar_path);
  auto nt = g.find_nonterminal(nonterminal);
  if (!nt) {
    throw InputError({Diagnostic{"unknown nonterminal '" + nonterminal + "'"}});
  }
  return with_algebra(g, algebra, [&](const auto& alg) {
    for (const auto& entry : enumerate_lightest(g, alg, *nt, count, node_cap)) {
      std::cout << alg.render(entry.weight) << "\t" << to_string(entry.term) << "\n";
    }
    return 0;
  });
}

int cmd_sat(const std::string& cnf_path, const std::string& emit_grammar_path,
            bool print_varsets) {
  CnfFormula cnf = load_dimacs(cnf_path);
  if (!emit_grammar_path.empty()) {
    write_text_file(emit_grammar_path, print_grammar(cnf_to_grammar(cnf)));
  }

  SatResult verdict = decide_sat(cnf);
  if (verdict.satisfiable) {
    std::cout << "SATISFIABLE\n";
    if (cnf.variable_count > 0) {
      std::cout << "v";
      for (uint32_t j = 0; j < cnf.variable_count; ++j) {
        std::cout << " " << (verdict.assignment[j] ? "" : "-") << (j + 1);
      }
      std::cout << " 0\n";
    }
  } else {
    std::cout << "UNSATISFIABLE\n";
  }

  if (print_varsets && !cnf.clauses.empty()) {
    Grammar g = cnf_to_grammar(cnf);
    VarSetSolve solved = solve_var_sets(g);
    std::cout << to_string(solved.families[0], solved.universe);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-weight computation for regular tree grammars"};
  app.require_subcommand(1);

  WeighOptions weigh_opt;
  CLI::App* weigh = app.add_subcommand("weigh", "Compute the minimal weight per nonterminal");
  weigh->add_option("--grammar", weigh_opt.grammar_path, "Grammar file (.rtg)")->required();
  weigh->add_option("--algebra", weigh_opt.algebra,
                    "size, height, minterm, or affine:PATH (default size)");
  weigh->add_option("--algorithm", weigh_opt.algorithm, "Solver (default lazy)")
      ->check(CLI::IsMember({"naive", "liquid", "lazy"}));
  weigh->add_option("--trace", weigh_opt.trace_path, "Write the cycle trace document here");
  weigh->add_flag("--witness", weigh_opt.witness, "Also print a minimal term per nonterminal");
  weigh->add_flag("--stats", weigh_opt.stats, "Print operation counts (table format)");
  weigh->add_option("--format", weigh_opt.format, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}));

  std::string prune_grammar, prune_out;
  CLI::App* prune = app.add_subcommand("prune", "Remove empty-language nonterminals");
  prune->add_option("--grammar", prune_grammar, "Grammar file (.rtg)")->required();
  prune->add_option("--out", prune_out, "Output grammar file")->required();

  std::string enum_grammar, enum_algebra = "size", enum_nonterminal;
  size_t enum_count = 1;
  size_t enum_cap = 1'000'000;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List the lightest terms of L(N)");
  enumerate->add_option("--grammar", enum_grammar, "Grammar file (.rtg)")->required();
  enumerate->add_option("--algebra", enum_algebra,
                        "size, height, minterm, or affine:PATH (default size)");
  enumerate->add_option("--nonterminal", enum_nonterminal, "Nonterminal to enumerate")
      ->required();
  enumerate->add_option("--count", enum_count, "Number of terms")->required();
  enumerate->add_option("--cap", enum_cap,
                        "Search queue node budget (default 1000000); exceeding it fails "
                        "with exit code 2");

  std::string sat_cnf, sat_emit_grammar;
  bool sat_varsets = false;
  CLI::App* sat = app.add_subcommand("sat", "Decide a DIMACS CNF via the grammar reduction");
  sat->add_option("--cnf", sat_cnf, "DIMACS cnf file")->required();
  sat->add_option("--emit-grammar", sat_emit_grammar, "Write the reduction grammar here");
  sat->add_flag("--varsets", sat_varsets, "Print the solved variable-set family of C'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (weigh->parsed()) return cmd_weigh(weigh_opt);
    if (prune->parsed()) return cmd_prune(prune_grammar, prune_out);
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_grammar, enum_algebra, enum_nonterminal, enum_count,
                           enum_cap);
    }
    if (sat->parsed()) return cmd_sat(sat_cnf, sat_emit_grammar, sat_varsets);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
