#include "treeweight/minterm.hpp"

#include "treeweight/diagnostics.hpp"

namespace treeweight {

MinTermAlgebra::MinTermAlgebra(const Signature& sig,
                               const std::vector<std::string>& precedence) {
  for (SymbolId f = 0; f < sig.size(); ++f) symbol_names_.push_back(sig[f].name);
  for (size_t i = 0; i < precedence.size(); ++i) {
    rank_.emplace(precedence[i], static_cast<int>(i));
  }
  std::vector<Diagnostic> errors;
  for (const std::string& name : symbol_names_) {
    if (!rank_.count(name)) {
      errors.push_back({"precedence is missing symbol '" + name + "'"});
    }
  }
  if (!errors.empty()) throw InputError(std::move(errors));
}

MinTermAlgebra::MinTermAlgebra(const Signature& sig)
    : MinTermAlgebra(sig, [&] {
        std::vector<std::string> names;
        for (SymbolId f = 0; f < sig.size(); ++f) names.push_back(sig[f].name);
        return names;
      }()) {}

int MinTermAlgebra::compare(const TermPtr& a, const TermPtr& b) const {
  if (!a || !b) return !a ? (!b ? 0 : 1) : -1;  // null = infinity = maximum
  if (a->size() != b->size()) return a->size() < b->size() ? -1 : 1;
  return preorder_compare(*a, *b, [this](const std::string& name) {
    auto it = rank_.find(name);
    if (it == rank_.end()) {
      throw InputError({Diagnostic{"term weight uses symbol '" + name +
                                   "' outside the precedence"}});
    }
    return it->second;
  });
}

TermPtr MinTermAlgebra::apply(SymbolId f, std::span<const TermPtr> args) const {
  std::vector<TermPtr> children;
  children.reserve(args.size());
  for (const TermPtr& a : args) {
    if (!a) return nullptr;  // infinity is absorbing
    children.push_back(a);
  }
  return Term::make(symbol_names_[f], std::move(children));
}

std::string MinTermAlgebra::render(const TermPtr& w) const {
  return w ? to_string(*w) : "INF";
}

}  // namespace treeweight
