#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace treeweight {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable ground term. Subtrees are shared, so witness maps and k-best
// frontiers stay compact even when the printed form would be large.
class Term {
 public:
  Term(std::string root, std::vector<TermPtr> children);

  static TermPtr make(std::string root, std::vector<TermPtr> children = {});

  const std::string& root() const { return root_; }
  const std::vector<TermPtr>& children() const { return children_; }
  uint32_t arity() const { return static_cast<uint32_t>(children_.size()); }

  // Node count; a constant has size 1.
  uint64_t size() const { return size_; }
  // Longest root-to-leaf path; a constant has height 1.
  uint32_t height() const { return height_; }
  size_t hash() const { return hash_; }

 private:
  std::string root_;
  std::vector<TermPtr> children_;
  uint64_t size_;
  uint32_t height_;
  size_t hash_;
};

bool term_equal(const Term& a, const Term& b);
inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  return term_equal(*a, *b);
}

// Three-way comparison of the preorder symbol sequences, with per-symbol
// ranks supplied by the caller. Sequences of different length compare by
// the first differing position (a proper prefix never occurs between terms
// of equal size, which is the only case the callers rely on).
int preorder_compare(const Term& a, const Term& b,
                     const std::function<int(const std::string&)>& rank);

// "f(g(a),b)" syntax; constants print without parentheses.
std::string to_string(const Term& t);
std::string to_string(const TermPtr& t);

struct TermPtrHash {
  size_t operator()(const TermPtr& t) const { return t->hash(); }
};
struct TermPtrEqual {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return term_equal(*a, *b);
  }
};

}  // namespace treeweight
