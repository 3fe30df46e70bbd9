#pragma once

#include <string>
#include <string_view>

#include "treeweight/grammar.hpp"
#include "treeweight/term.hpp"

namespace treeweight {

// Parses the .rtg grammar format:
//
//   file := { rule }
//   rule := IDENT "::=" [ alt { "|" alt } ] ";"
//   alt  := IDENT [ "(" IDENT { "," IDENT } ")" ]
//
// '#' starts a comment running to end of line. Identifiers match
// [A-Za-z_][A-Za-z0-9_']*. Every rule head is a nonterminal; every
// alternative head is a symbol whose arity is fixed by its first use.
// Throws InputError (with positions) on syntax errors, duplicate rules,
// undefined nonterminals in argument position, arity conflicts, and names
// used as both symbol and nonterminal.
Grammar parse_grammar(std::string_view text);

// Reads and parses a .rtg file; I/O failures become InputError.
Grammar load_grammar(const std::string& path);

// Parses a ground term in the f(g(a),b) syntax used by print functions and
// checks symbols/arities against the signature.
TermPtr parse_term(const Signature& sig, std::string_view text);

// Reads a whole file into a string; throws InputError when unreadable.
std::string read_file(const std::string& path);

}  // namespace treeweight
