/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/cf_expansion.hpp"
#include "surdcf/error.hpp"
#include "surdcf/quad_irr.hpp"

#include <string>
#include <string_view>

namespace surdcf {

/*
 * Text formats.
 *
 *   cf     := "[" integer ( (";" | ",") body )? "]"
 *   body   := terms | terms "," period | period
 *   terms  := integer ("," integer)*
 *   period := "(" integer ("," integer)* ")"
 *
 *   quad   := rational ("+" | "-") "sqrt" "(" rational ")"
 *           | ("+" | "-")? "sqrt" "(" rational ")"
 *           | "(" integer ("+" | "-") "sqrt" "(" integer ")" ")" "/" integer
 *   rational := integer ("/" integer)?
 *   integer  := "-"? decimal-digits
 *
 * Whitespace may appear between any two tokens. Denominators must be
 * positive.
 */

/// Throws ParseError, or InvalidDigit (with span) for a digit < 1 past position 0.
CFExpansion parse_cf(std::string_view text);

/// Throws ParseError, DegenerateRadicand or NonPositiveRadicand.
QuadIrr parse_quad(std::string_view text);

/// "[0; 1, (16,11,1)]" style; parse_cf(render_cf(cf)) == cf.
std::string render_cf(const CFExpansion &cf);

/// "(P ± sqrt(D))/Q" when that integer form exists and a != 0, else x.str().
std::string render_quad(const QuadIrr &x);

/// The input line followed by a caret line under the span.
std::string caret_diagnostic(std::string_view text, const SourceSpan &span);

} // namespace surdcf
