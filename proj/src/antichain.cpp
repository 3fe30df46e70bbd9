#include "treeweight/antichain.hpp"

#include <algorithm>
#include <bit>

#include "treeweight/diagnostics.hpp"

namespace treeweight {

uint32_t VarSet::count() const {
  uint32_t n = 0;
  for (uint64_t w : words_) n += static_cast<uint32_t>(std::popcount(w));
  return n;
}

std::vector<uint32_t> VarSet::members() const {
  std::vector<uint32_t> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

int VarSet::compare(const VarSet& a, const VarSet& b) {
  uint32_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb ? -1 : 1;
  for (size_t w = 0; w < a.words_.size(); ++w) {
    uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      uint64_t lowest = diff & -diff;
      return (a.words_[w] & lowest) ? -1 : 1;
    }
  }
  return 0;
}

void canonicalize(VarSetFamily& family) {
  std::sort(family.begin(), family.end(), VarSetLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

VarSetFamily pointwise_union(std::span<const VarSetFamily> families, uint32_t universe_size,
                             size_t max_size) {
  VarSetFamily acc{VarSet(universe_size)};
  for (const VarSetFamily& fam : families) {
    VarSetFamily next;
    next.reserve(acc.size() * fam.size());
    for (const VarSet& a : acc) {
      for (const VarSet& s : fam) {
        VarSet u = a;
        u.unite(s);
        next.push_back(std::move(u));
      }
    }
    canonicalize(next);
    if (next.size() > max_size) {
      throw ResourceLimitError("variable-set family exceeded the size cap of " +
                               std::to_string(max_size) + " members");
    }
    acc = std::move(next);
  }
  return acc;
}

VarSetFamily minimize_antichain(const VarSetFamily& family) {
  VarSetFamily sorted = family;
  canonicalize(sorted);
  VarSetFamily kept;
  for (const VarSet& s : sorted) {
    bool dominated = false;
    for (const VarSet& k : kept) {
      // kept members are no larger, so subset means proper subset or equal;
      // equals were collapsed already
      if (k.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

VarUniverse VarUniverse::from_signature(const Signature& sig) {
  VarUniverse u;
  for (SymbolId f = 0; f < sig.size(); ++f) {
    if (sig[f].is_variable) u.names.push_back(sig[f].name);
  }
  std::sort(u.names.begin(), u.names.end());
  for (uint32_t i = 0; i < u.names.size(); ++i) u.index.emplace(u.names[i], i);
  return u;
}

std::string to_string(const VarSet& s, const VarUniverse& u) {
  std::string out = "{";
  bool first = true;
  for (uint32_t i : s.members()) {
    if (!first) out += ",";
    first = false;
    out += u.names[i];
  }
  return out + "}";
}

std::string to_string(const VarSetFamily& family, const VarUniverse& u) {
  std::string out;
  for (const VarSet& s : family) {
    out += to_string(s, u);
    out += '\n';
  }
  return out;
}

}  // namespace treeweight
