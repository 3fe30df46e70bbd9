#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "treeweight/grammar.hpp"

namespace treeweight {

// Set of variables as a bit vector over a fixed universe; bit order is the
// universe's name order, so bitwise comparisons realize the canonical
// (cardinality, then name-lexicographic) ordering directly.
class VarSet {
 public:
  explicit VarSet(uint32_t universe_size)
      : words_((universe_size + 63) / 64, 0) {}

  void set(uint32_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
  bool test(uint32_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  void unite(const VarSet& o) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }

  bool subset_of(const VarSet& o) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }

  uint32_t count() const;
  std::vector<uint32_t> members() const;

  bool operator==(const VarSet& o) const { return words_ == o.words_; }

  // Canonical order: smaller cardinality first, then lexicographic on the
  // ascending member sequences (= the set owning the lowest differing bit
  // is smaller).
  static int compare(const VarSet& a, const VarSet& b);

 private:
  std::vector<uint64_t> words_;
};

struct VarSetLess {
  bool operator()(const VarSet& a, const VarSet& b) const {
    return VarSet::compare(a, b) < 0;
  }
};

// A family of variable sets; "canonical" means sorted in VarSet::compare
// order with duplicates removed. Only minimize_antichain guarantees the
// antichain (no-proper-subset) property.
using VarSetFamily = std::vector<VarSet>;

// Sorts canonically and collapses duplicates.
void canonicalize(VarSetFamily& family);

// { union of one pick per family }, duplicates collapsed, not minimized;
// zero families yield {{}} (the union identity). An intermediate result
// larger than max_size raises ResourceLimitError.
VarSetFamily pointwise_union(std::span<const VarSetFamily> families, uint32_t universe_size,
                             size_t max_size = size_t{1} << 20);

// Retains exactly the subset-minimal members, canonically ordered.
VarSetFamily minimize_antichain(const VarSetFamily& family);

// The variable symbols of a signature, name-sorted to fix bit order.
struct VarUniverse {
  std::vector<std::string> names;
  std::unordered_map<std::string, uint32_t> index;

  uint32_t size() const { return static_cast<uint32_t>(names.size()); }
  static VarUniverse from_signature(const Signature& sig);
};

// "{y1,z2}" and one set per line, both in canonical order.
std::string to_string(const VarSet& s, const VarUniverse& u);
std::string to_string(const VarSetFamily& family, const VarUniverse& u);

}  // namespace treeweight
