#include "treeweight/trace_json.hpp"

#include <json.hpp>

namespace treeweight {

using nlohmann::ordered_json;

std::string trace_to_json(const RenderedSolve& r) {
  ordered_json doc;
  doc["algorithm"] = r.algorithm;
  doc["nonterminals"] = r.nonterminals;

  doc["cycles"] = ordered_json::array();
  for (const RenderedCycle& c : r.cycles) {
    ordered_json jc;
    jc["cycle"] = c.cycle;
    jc["changes"] = ordered_json::array();
    for (const auto& [name, weight] : c.changes) {
      jc["changes"].push_back({{"nonterminal", name}, {"weight", weight}});
    }
    if (r.lazy) {
      jc["front"] = c.front;
      jc["minimals"] = c.minimals;
      jc["done"] = c.done;
    }
    doc["cycles"].push_back(std::move(jc));
  }

  ordered_json weights = ordered_json::object();
  for (const auto& [name, weight] : r.weights) weights[name] = weight;
  doc["weights"] = std::move(weights);

  if (!r.witnesses.empty()) {
    ordered_json witnesses = ordered_json::object();
    for (const auto& [name, term] : r.witnesses) witnesses[name] = term;
    doc["witnesses"] = std::move(witnesses);
  }

  ordered_json stats;
  stats["cycles"] = r.stats.cycles;
  stats["alternativeEvaluations"] = r.stats.alternative_evaluations;
  if (r.lazy) stats["heapOperations"] = r.stats.heap_operations;
  ordered_json changes = ordered_json::object();
  for (size_t n = 0; n < r.nonterminals.size() && n < r.stats.value_changes.size(); ++n) {
    changes[r.nonterminals[n]] = r.stats.value_changes[n];
  }
  stats["valueChanges"] = std::move(changes);
  doc["stats"] = std::move(stats);

  return doc.dump(2) + "\n";
}

}  // namespace treeweight
