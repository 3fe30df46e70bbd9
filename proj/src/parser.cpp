#include "treeweight/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace treeweight {

namespace {

enum class Tok { Ident, Define, Bar, LParen, RParen, Comma, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Define: return "'::='";
    case Tok::Bar: return "'|'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    SourcePos pos{line_, col_};
    if (i_ >= text_.size()) return {Tok::End, "", pos};
    char c = text_[i_];
    if (ident_start(c)) {
      size_t start = i_;
      while (i_ < text_.size() && ident_cont(text_[i_])) advance();
      return {Tok::Ident, std::string(text_.substr(start, i_ - start)), pos};
    }
    switch (c) {
      case '|': advance(); return {Tok::Bar, "|", pos};
      case '(': advance(); return {Tok::LParen, "(", pos};
      case ')': advance(); return {Tok::RParen, ")", pos};
      case ',': advance(); return {Tok::Comma, ",", pos};
      case ';': advance(); return {Tok::Semi, ";", pos};
      case ':':
        if (text_.substr(i_, 3) == "::=") {
          advance(); advance(); advance();
          return {Tok::Define, "::=", pos};
        }
        break;
      default: break;
    }
    throw InputError({Diagnostic{std::string("unexpected character '") + c + "'", pos}});
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t i_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

struct RawAlt {
  Token symbol;
  std::vector<Token> args;
};

struct RawRule {
  Token head;
  std::vector<RawAlt> alts;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

  std::vector<RawRule> parse_file() {
    std::vector<RawRule> rules;
    while (cur_.kind != Tok::End) rules.push_back(parse_rule());
    return rules;
  }

 private:
  Token expect(Tok kind) {
    if (cur_.kind != kind) {
      throw InputError({Diagnostic{std::string("expected ") + tok_name(kind) + ", found " +
                                       (cur_.kind == Tok::Ident ? "'" + cur_.text + "'"
                                                                : tok_name(cur_.kind)),
                                   cur_.pos}});
    }
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }

  RawRule parse_rule() {
    RawRule rule;
    rule.head = expect(Tok::Ident);
    expect(Tok::Define);
    if (cur_.kind != Tok::Semi) {
      rule.alts.push_back(parse_alt());
      while (cur_.kind == Tok::Bar) {
        expect(Tok::Bar);
        rule.alts.push_back(parse_alt());
      }
    }
    expect(Tok::Semi);
    return rule;
  }

  RawAlt parse_alt() {
    RawAlt alt;
    alt.symbol = expect(Tok::Ident);
    if (cur_.kind == Tok::LParen) {
      expect(Tok::LParen);
      alt.args.push_back(expect(Tok::Ident));
      while (cur_.kind == Tok::Comma) {
        expect(Tok::Comma);
        alt.args.push_back(expect(Tok::Ident));
      }
      expect(Tok::RParen);
    }
    return alt;
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::vector<RawRule> raw = Parser(text).parse_file();

  Grammar g;
  std::vector<Diagnostic> errors;
  std::unordered_map<std::string, NtId> nt_index;
  for (const RawRule& rule : raw) {
    auto [it, inserted] = nt_index.emplace(rule.head.text, g.nt_count());
    if (!inserted) {
      errors.push_back({"duplicate rule for nonterminal '" + rule.head.text + "'", rule.head.pos});
      continue;
    }
    g.nonterminals.push_back(rule.head.text);
  }

  // First-use order fixes both symbol ids and declared arities.
  std::unordered_map<std::string, SourcePos> first_symbol_use;
  g.rules.resize(g.nt_count());
  std::unordered_set<std::string> seen_heads;
  for (const RawRule& rule : raw) {
    if (!seen_heads.insert(rule.head.text).second) continue;  // duplicate, reported above
    NtId owner = nt_index.at(rule.head.text);
    for (const RawAlt& ra : rule.alts) {
      const std::string& sym_name = ra.symbol.text;
      if (nt_index.count(sym_name)) {
        errors.push_back({"'" + sym_name + "' is a nonterminal but is used as a symbol here",
                          ra.symbol.pos});
        continue;
      }
      uint32_t arity = static_cast<uint32_t>(ra.args.size());
      auto existing = g.signature.find(sym_name);
      SymbolId sym;
      if (existing) {
        sym = *existing;
        if (g.signature[sym].arity != arity) {
          errors.push_back({"symbol '" + sym_name + "' used with " + std::to_string(arity) +
                                " arguments, but first use at " +
                                first_symbol_use[sym_name].to_string() + " has " +
                                std::to_string(g.signature[sym].arity),
                            ra.symbol.pos});
          continue;
        }
      } else {
        sym = g.signature.add(sym_name, arity);
        first_symbol_use[sym_name] = ra.symbol.pos;
      }
      Alternative alt;
      alt.symbol = sym;
      bool ok = true;
      for (const Token& arg : ra.args) {
        auto nt = nt_index.find(arg.text);
        if (nt == nt_index.end()) {
          errors.push_back({"undefined nonterminal '" + arg.text + "'", arg.pos});
          ok = false;
        } else {
          alt.args.push_back(nt->second);
        }
      }
      if (ok) g.rules[owner].push_back(std::move(alt));
    }
  }

  if (!errors.empty()) throw InputError(std::move(errors));
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError({Diagnostic{"cannot open '" + path + "'"}});
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError({Diagnostic{"error while reading '" + path + "'"}});
  return buf.str();
}

Grammar load_grammar(const std::string& path) {
  try {
    return parse_grammar(read_file(path));
  } catch (InputError& e) {
    std::vector<Diagnostic> tagged;
    for (const Diagnostic& d : e.diagnostics()) {
      tagged.push_back({path + ": " + d.message, d.pos});
    }
    throw InputError(std::move(tagged));
  }
}

namespace {

class TermParser {
 public:
  TermParser(const Signature& sig, std::string_view text) : sig_(sig), lex_(text) {
    cur_ = lex_.next();
  }

  TermPtr parse() {
    TermPtr t = parse_term_node();
    if (cur_.kind != Tok::End) {
      throw InputError({Diagnostic{"trailing input after term", cur_.pos}});
    }
    return t;
  }

 private:
  Token expect(Tok kind) {
    if (cur_.kind != kind) {
      throw InputError({Diagnostic{std::string("expected ") + tok_name(kind) + ", found " +
                                       (cur_.kind == Tok::Ident ? "'" + cur_.text + "'"
                                                                : tok_name(cur_.kind)),
                                   cur_.pos}});
    }
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }

  TermPtr parse_term_node() {
    Token head = expect(Tok::Ident);
    std::vector<TermPtr> children;
    if (cur_.kind == Tok::LParen) {
      expect(Tok::LParen);
      children.push_back(parse_term_node());
      while (cur_.kind == Tok::Comma) {
        expect(Tok::Comma);
        children.push_back(parse_term_node());
      }
      expect(Tok::RParen);
    }
    auto sym = sig_.find(head.text);
    if (!sym) {
      throw InputError({Diagnostic{"unknown symbol '" + head.text + "'", head.pos}});
    }
    if (sig_[*sym].arity != children.size()) {
      throw InputError({Diagnostic{"symbol '" + head.text + "' expects " +
                                       std::to_string(sig_[*sym].arity) + " arguments, got " +
                                       std::to_string(children.size()),
                                   head.pos}});
    }
    return Term::make(head.text, std::move(children));
  }

  const Signature& sig_;
  Lexer lex_;
  Token cur_;
};

}  // namespace

TermPtr parse_term(const Signature& sig, std::string_view text) {
  return TermParser(sig, text).parse();
}

}  // namespace treeweight
