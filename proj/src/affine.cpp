#include "treeweight/affine.hpp"

#include <cctype>

#include "treeweight/parser.hpp"

namespace treeweight {

namespace {

// Cursor over a single .costs line; cols are 1-based for diagnostics.
struct LineScanner {
  std::string_view s;
  size_t i = 0;
  uint32_t line;

  LineScanner(std::string_view text, uint32_t line_no) : s(text), line(line_no) {}

  SourcePos pos() const { return {line, static_cast<uint32_t>(i + 1)}; }

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  }

  bool at_end() {
    skip_ws();
    return i >= s.size();
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw InputError({Diagnostic{msg, pos()}});
  }

  std::string ident() {
    skip_ws();
    if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      fail("expected an identifier");
    }
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                            s[i] == '\'')) {
      ++i;
    }
    return std::string(s.substr(start, i - start));
  }

  bool peek_digit_or_minus() {
    skip_ws();
    return i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-');
  }

  int64_t number() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      fail("expected a number");
    }
    int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      int digit = s[i] - '0';
      if (v > (INT64_MAX - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      ++i;
    }
    return neg ? -v : v;
  }
};

void parse_costs_line(std::string_view line, uint32_t line_no, AffineCostSpec& spec) {
  LineScanner sc(line, line_no);
  if (sc.at_end()) return;

  std::string symbol = sc.ident();
  std::vector<std::string> params;
  if (sc.eat('(')) {
    params.push_back(sc.ident());
    while (sc.eat(',')) params.push_back(sc.ident());
    if (!sc.eat(')')) sc.fail("expected ')' or ','");
  }
  for (size_t a = 0; a < params.size(); ++a) {
    for (size_t b = a + 1; b < params.size(); ++b) {
      if (params[a] == params[b]) sc.fail("duplicate parameter '" + params[a] + "'");
    }
  }
  if (!sc.eat('=')) sc.fail("expected '='");

  AffineRow row;
  row.coeffs.assign(params.size(), 0);
  std::vector<bool> mentioned(params.size(), false);

  // rhs := term { "+" term }, term := NUMBER | [NUMBER "*"] IDENT
  do {
    if (sc.peek_digit_or_minus()) {
      int64_t n = sc.number();
      if (sc.eat('*')) {
        std::string p = sc.ident();
        size_t idx = params.size();
        for (size_t k = 0; k < params.size(); ++k) {
          if (params[k] == p) idx = k;
        }
        if (idx == params.size()) sc.fail("unknown parameter '" + p + "'");
        row.coeffs[idx] += n;
        mentioned[idx] = true;
      } else {
        row.constant += n;
      }
    } else {
      std::string p = sc.ident();
      size_t idx = params.size();
      for (size_t k = 0; k < params.size(); ++k) {
        if (params[k] == p) idx = k;
      }
      if (idx == params.size()) sc.fail("unknown parameter '" + p + "'");
      row.coeffs[idx] += 1;
      mentioned[idx] = true;
    }
  } while (sc.eat('+'));
  if (!sc.at_end()) sc.fail("trailing input after cost expression");

  // A parameter the line never mentions keeps the default coefficient 1.
  for (size_t k = 0; k < params.size(); ++k) {
    if (!mentioned[k]) row.coeffs[k] = 1;
  }

  if (!spec.rows.emplace(symbol, std::move(row)).second) {
    throw InputError({Diagnostic{"duplicate cost row for symbol '" + symbol + "'",
                                 {line_no, 1}}});
  }
}

}  // namespace

AffineCostSpec parse_costs(std::string_view text) {
  AffineCostSpec spec;
  uint32_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    parse_costs_line(line, line_no, spec);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return spec;
}

AffineCostSpec load_costs(const std::string& path) {
  try {
    return parse_costs(read_file(path));
  } catch (InputError& e) {
    std::vector<Diagnostic> tagged;
    for (const Diagnostic& d : e.diagnostics()) {
      tagged.push_back({path + ": " + d.message, d.pos});
    }
    throw InputError(std::move(tagged));
  }
}

AffineAlgebra::AffineAlgebra(const Signature& sig, const AffineCostSpec& spec) {
  constants_.assign(sig.size(), 0);
  coeffs_.resize(sig.size());
  std::vector<Diagnostic> errors;
  for (SymbolId f = 0; f < sig.size(); ++f) {
    const Symbol& sym = sig[f];
    auto it = spec.rows.find(sym.name);
    if (it == spec.rows.end()) {
      errors.push_back({"no cost row for symbol '" + sym.name + "'"});
      continue;
    }
    const AffineRow& row = it->second;
    if (row.coeffs.size() != sym.arity) {
      errors.push_back({"cost row for '" + sym.name + "' has " +
                        std::to_string(row.coeffs.size()) + " parameters, symbol arity is " +
                        std::to_string(sym.arity)});
      continue;
    }
    if (row.constant < 0) {
      errors.push_back({"cost row for '" + sym.name + "' has negative constant " +
                        std::to_string(row.constant)});
      continue;
    }
    bool neg_coeff = false;
    for (int64_t c : row.coeffs) {
      if (c < 0) {
        errors.push_back({"cost row for '" + sym.name + "' has negative coefficient " +
                          std::to_string(c)});
        neg_coeff = true;
        break;
      }
    }
    if (neg_coeff) continue;
    constants_[f] = static_cast<uint64_t>(row.constant);
    coeffs_[f].assign(row.coeffs.begin(), row.coeffs.end());
  }
  if (!errors.empty()) throw InputError(std::move(errors));
}

AffineAlgebra affine_algebra(const Signature& sig, const AffineCostSpec& spec) {
  std::vector<Diagnostic> errors;
  for (SymbolId f = 0; f < sig.size(); ++f) {
    const Symbol& sym = sig[f];
    auto it = spec.rows.find(sym.name);
    if (it == spec.rows.end()) continue;  // the constructor reports this
    const AffineRow& row = it->second;
    if (row.coeffs.size() != sym.arity) continue;
    for (size_t i = 0; i < row.coeffs.size(); ++i) {
      if (row.coeffs[i] < 1) {
        errors.push_back({"cost row for '" + sym.name + "': coefficient of parameter " +
                          std::to_string(i + 1) + " is " + std::to_string(row.coeffs[i]) +
                          ", must be >= 1"});
      }
    }
  }
  AffineAlgebra alg(sig, spec);  // reports missing rows, arity, negatives
  if (!errors.empty()) throw InputError(std::move(errors));
  return alg;
}

}  // namespace treeweight
