#include "treeweight/diagnostics.hpp"

namespace treeweight {

std::string SourcePos::to_string() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string Diagnostic::to_string() const {
  if (pos.line == 0) return message;
  return pos.to_string() + ": " + message;
}

std::string join_diagnostics(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (size_t i = 0; i < diags.size(); ++i) {
    if (i) out += '\n';
    out += diags[i].to_string();
  }
  return out;
}

}  // namespace treeweight
