#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace treeweight {

// 1-based source position; line 0 means "no position" (post-parse diagnostics).
struct SourcePos {
  uint32_t line = 0;
  uint32_t column = 0;

  std::string to_string() const;  // "line 3, column 7"
};

struct Diagnostic {
  std::string message;
  SourcePos pos{};

  std::string to_string() const;
};

std::string join_diagnostics(const std::vector<Diagnostic>& diags);

// Raised by the text-input parsers (.rtg, .costs, DIMACS) and by grammar
// resolution. Carries all diagnostics collected before giving up.
class InputError : public std::runtime_error {
 public:
  explicit InputError(std::vector<Diagnostic> diags)
      : std::runtime_error(join_diagnostics(diags)), diags_(std::move(diags)) {}

  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

// Raised when a configurable resource cap (enumeration frontier, antichain
// size) is exceeded. The CLI maps this to exit code 2.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace treeweight
