#include "treeweight/term.hpp"

#include <algorithm>
#include <functional>

namespace treeweight {

namespace {

size_t combine_hash(size_t seed, size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Term::Term(std::string root, std::vector<TermPtr> children)
    : root_(std::move(root)), children_(std::move(children)) {
  size_ = 1;
  height_ = 1;
  hash_ = std::hash<std::string>{}(root_);
  for (const TermPtr& c : children_) {
    size_ += c->size();
    height_ = std::max(height_, c->height() + 1);
    hash_ = combine_hash(hash_, c->hash());
  }
}

TermPtr Term::make(std::string root, std::vector<TermPtr> children) {
  return std::make_shared<Term>(std::move(root), std::move(children));
}

bool term_equal(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.size() != b.size() || a.hash() != b.hash()) return false;
  if (a.root() != b.root() || a.arity() != b.arity()) return false;
  for (uint32_t i = 0; i < a.arity(); ++i) {
    if (!term_equal(*a.children()[i], *b.children()[i])) return false;
  }
  return true;
}

int preorder_compare(const Term& a, const Term& b,
                     const std::function<int(const std::string&)>& rank) {
  // Explicit stacks; terms may be deep chains.
  std::vector<const Term*> sa{&a};
  std::vector<const Term*> sb{&b};
  while (!sa.empty() && !sb.empty()) {
    const Term* ta = sa.back();
    const Term* tb = sb.back();
    sa.pop_back();
    sb.pop_back();
    int ra = rank(ta->root());
    int rb = rank(tb->root());
    if (ra != rb) return ra < rb ? -1 : 1;
    for (auto it = ta->children().rbegin(); it != ta->children().rend(); ++it)
      sa.push_back(it->get());
    for (auto it = tb->children().rbegin(); it != tb->children().rend(); ++it)
      sb.push_back(it->get());
  }
  if (sa.empty() && sb.empty()) return 0;
  return sa.empty() ? -1 : 1;
}

static void print_into(const Term& t, std::string& out) {
  out += t.root();
  if (!t.children().empty()) {
    out += '(';
    for (size_t i = 0; i < t.children().size(); ++i) {
      if (i > 0) out += ',';
      print_into(*t.children()[i], out);
    }
    out += ')';
  }
}

std::string to_string(const Term& t) {
  std::string out;
  out.reserve(t.size() * 2);
  print_into(t, out);
  return out;
}

std::string to_string(const TermPtr& t) { return to_string(*t); }

}  // namespace treeweight
