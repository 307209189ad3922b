/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include <gmpxx.h>

#include <string>

namespace surdcf {

/// Signed arbitrary-precision integer.
using Integer = mpz_class;

struct IsqrtResult {
	Integer root;
	bool exact;
};

/// Floor square root of n >= 0. Throws std::domain_error for negative n.
IsqrtResult isqrt(const Integer &n);

bool is_perfect_square(const Integer &n);

/// Floor division (rounds toward negative infinity). d != 0.
Integer floor_div(const Integer &n, const Integer &d);

/// Least nonnegative residue of n modulo m > 0.
Integer mod_floor(const Integer &n, const Integer &m);

inline int sgn(const Integer &n) { return ::sgn(n); }

std::string to_string(const Integer &n);

} // namespace surdcf
