#ifndef EMOLOG_SYNTAX_HPP
#define EMOLOG_SYNTAX_HPP

#include <string>

#include "emolog/formula.hpp"

namespace emolog {

// Concrete formula syntax.
//
//   formula := iff
//   iff     := imp ("<->" imp)*          left associative
//   imp     := or ("->" imp)?            right associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "N" unary | "Nbar" unary
//            | "K[" agent "]" unary
//            | "H[" agent (";" degree)? "]" unary
//            | "S[" agent (";" degree)? "]" unary
//            | atom
//   atom    := variable | "(" formula ")"
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]*. "N" and "Nbar" are reserved words,
// never variables. "K", "H", "S" act as modalities only when directly
// followed by "["; otherwise they are ordinary variables. Degrees are
// nonnegative decimal literals. Sugar (&, |, <->, Nbar) expands during
// parsing, so the result contains primitives only.

Formula parse_formula(const std::string& text); // throws ParseError

// Minimal-parenthesis form; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

} // namespace emolog

#endif
