#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeweight/algebra.hpp"
#include "treeweight/grammar.hpp"

namespace treeweight {

// One cost row: interpretation c + a_1*x_1 + ... + a_n*x_n for a symbol of
// arity n. Signed so that invalid inputs can be represented and rejected
// with a proper message instead of silently wrapping.
struct AffineRow {
  int64_t constant = 0;
  std::vector<int64_t> coeffs;
};

struct AffineCostSpec {
  std::map<std::string, AffineRow> rows;
};

// Parses the .costs format, one entry per line:
//
//   f = c
//   f(x1,..,xn) = c + a1*x1 + ... + an*xn
//
// '#' starts a comment. Omitted parts of a present line default to
// constant 0 and coefficient 1; repeated terms for the same parameter sum.
// Throws InputError on malformed lines, duplicate rows, duplicate or
// unknown parameter names.
AffineCostSpec parse_costs(std::string_view text);

// Reads and parses a .costs file; I/O failures become InputError.
AffineCostSpec load_costs(const std::string& path);

// Affine interpretation over naturals with infinity; arithmetic saturates.
// Constructing one does not check the algebra laws (check_algebra_laws can
// probe a hand-built instance); use affine_algebra() for validated
// construction. Negative entries are unrepresentable here and throw.
class AffineAlgebra {
 public:
  using Weight = uint64_t;

  AffineAlgebra(const Signature& sig, const AffineCostSpec& spec);

  uint64_t infinity() const { return nat_inf; }
  int compare(uint64_t a, uint64_t b) const { return compare_nat(a, b); }
  std::string render(uint64_t w) const { return render_nat(w); }

  uint64_t apply(SymbolId f, std::span<const uint64_t> args) const {
    uint64_t w = constants_[f];
    for (size_t i = 0; i < args.size(); ++i) {
      w = nat_add(w, nat_mul(coeffs_[f][i], args[i]));
    }
    return w;
  }

 private:
  std::vector<uint64_t> constants_;             // by SymbolId
  std::vector<std::vector<uint64_t>> coeffs_;   // by SymbolId, then position
};

// Validating factory: requires a row for every signature symbol, matching
// arities, constants >= 0 and coefficients >= 1 (sufficient for the
// monotonic + increasing laws). Throws InputError otherwise.
AffineAlgebra affine_algebra(const Signature& sig, const AffineCostSpec& spec);

}  // namespace treeweight
