#include "treeweight/prune.hpp"

namespace treeweight {

Grammar prune_empty(const Grammar& g, const std::vector<bool>& empty) {
  Grammar out;
  out.signature = g.signature;

  std::vector<NtId> remap(g.nt_count());
  for (NtId n = 0; n < g.nt_count(); ++n) {
    if (!empty[n]) {
      remap[n] = out.nt_count();
      out.nonterminals.push_back(g.nonterminals[n]);
    }
  }
  out.rules.resize(out.nt_count());
  for (NtId n = 0; n < g.nt_count(); ++n) {
    if (empty[n]) continue;
    for (const Alternative& alt : g.rules[n]) {
      bool keep = true;
      for (NtId arg : alt.args) {
        if (empty[arg]) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
      Alternative mapped;
      mapped.symbol = alt.symbol;
      for (NtId arg : alt.args) mapped.args.push_back(remap[arg]);
      out.rules[remap[n]].push_back(std::move(mapped));
    }
  }
  return out;
}

}  // namespace treeweight
