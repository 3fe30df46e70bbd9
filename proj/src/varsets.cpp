#include "treeweight/varsets.hpp"

#include <span>

#include "treeweight/diagnostics.hpp"

namespace treeweight {

VarSetSolve solve_var_sets(const Grammar& g, size_t max_family_size) {
  {
    std::vector<Diagnostic> diags = validate(g);
    for (SymbolId f = 0; f < g.signature.size(); ++f) {
      if (g.signature[f].is_variable && g.signature[f].arity != 0) {
        diags.push_back({"variable symbol '" + g.signature[f].name + "' has arity " +
                         std::to_string(g.signature[f].arity) + ", variables must be nullary"});
      }
    }
    if (!diags.empty()) throw InputError(std::move(diags));
  }

  VarSetSolve out;
  out.universe = VarUniverse::from_signature(g.signature);
  const uint32_t nv = out.universe.size();
  out.families.assign(g.nt_count(), VarSetFamily{});

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<VarSetFamily> next(g.nt_count());
    for (NtId n = 0; n < g.nt_count(); ++n) {
      VarSetFamily acc = out.families[n];
      for (const Alternative& alt : g.rules[n]) {
        const Symbol& sym = g.signature[alt.symbol];
        VarSetFamily contribution;
        if (sym.is_variable) {
          VarSet s(nv);
          s.set(out.universe.index.at(sym.name));
          contribution.push_back(std::move(s));
        } else {
          std::vector<VarSetFamily> args;
          args.reserve(alt.args.size());
          for (NtId arg : alt.args) args.push_back(out.families[arg]);
          contribution = minimize_antichain(
              pointwise_union(std::span<const VarSetFamily>(args), nv, max_family_size));
        }
        acc.insert(acc.end(), contribution.begin(), contribution.end());
      }
      VarSetFamily merged = minimize_antichain(acc);
      if (merged.size() > max_family_size) {
        throw ResourceLimitError("variable-set family exceeded the size cap of " +
                                 std::to_string(max_family_size) + " members");
      }
      if (!(merged == out.families[n])) changed = true;
      next[n] = std::move(merged);
    }
    out.families = std::move(next);
  }
  return out;
}

}  // namespace treeweight
