#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mwk/kmwterm.hpp"

namespace mwk {

// Identity language:
//   term  := sum;  sum := ['+'|'-'] prod (('+'|'-') prod)*;  prod := atom (['*'] atom)*
//   atom  := primary ('^' INT)*
//   primary := INT | 'eta' | 'eps' | 'h' | '[' usum ']' | '<' usum '>' | '(' term ')'
//   usum  := uprod (('+'|'-') uprod)*;  uprod := ufactor (('*'|'/') ufactor)*
//   ufactor := '-' ufactor | uprimary ['^' ['-'] INT];  uprimary := IDENT | INT | '(' usum ')'
//   hypotheses := unit '(' usum ')' ((','|';')? unit '(' usum ')')*
// Abbreviations <u>, eps and h are expanded while parsing.
// `line` offsets reported line numbers for text taken from a file.

UnitExpr parse_unit_expr(std::string_view text, std::size_t line = 1);
KmwTerm parse_term(std::string_view text, std::size_t line = 1);
Hypotheses parse_hypotheses(std::string_view text, std::size_t line = 1);

// "lhs = rhs", optionally followed by "| unit(..), unit(..)". Extra
// hypotheses are merged in. The identity is validated.
Identity parse_identity(std::string_view text, const Hypotheses& extra = {}, std::size_t line = 1);

// One identity per non-blank line; '#' starts a comment.
std::vector<Identity> parse_identity_file(std::string_view contents, const Hypotheses& extra = {});

}  // namespace mwk
