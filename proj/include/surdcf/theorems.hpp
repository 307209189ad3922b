/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/convergents.hpp"
#include "surdcf/rational.hpp"

namespace surdcf {

// Quantities attached to x = [0; (c_1, ..., c_n)] with rational part a. All
// functions take the repeating block c_1 .. c_n and build convergents over
// [0, c_1, ..., c_n]. They throw InvalidDigit for digits < 1 and
// std::invalid_argument for an empty block.

/// (p_{n-1} - q_{n-2}) / q_{n-1}; 2a = -c_n + epsilon.
Rational epsilon(const Digits &repeating);

/// c_k == c_{n-k} for k = 1 .. n-1. Vacuously true for n = 1.
bool is_palindromic_prefix(const Digits &repeating);

/// p_{n-1}^2 == (-1)^n (mod q_{n-1}), residues taken in [0, q_{n-1}).
bool congruence_check(const Digits &repeating);

enum class FracCase { PGeQ, PLtQ };

const char *to_string(FracCase c);

struct TheoremReport {
	Digits block;
	Rational epsilon;
	Rational two_a;
	/// fractional part of two_a, in [0, 1)
	Rational frac_two_a;
	FracCase case_flag;
	bool palindromic;
	bool congruence_holds;
	bool epsilon_zero;
};

TheoremReport theorem1_report(const Digits &repeating);

struct Theorem2Assertions {
	bool two_a_integral;
	bool two_a_is_minus_cn;
	bool palindromic;

	bool consistent() const { return two_a_integral == two_a_is_minus_cn && two_a_is_minus_cn == palindromic; }
};

Theorem2Assertions theorem2_report(const Digits &repeating);

/// A c^2 + B c + C, the discriminant of x's quadratic equation as a polynomial in c = c_n.
struct DiscriminantPoly {
	Integer a, b, c;

	Integer at(const Integer &cn) const { return (a * cn + b) * cn + c; }

	friend bool operator==(const DiscriminantPoly &, const DiscriminantPoly &) = default;
};

/**
 * Coefficients for the prefix c_1 .. c_{n-1} (possibly empty). The
 * irrational part of x is sqrt(at(c_n)) / (2 q_{n-1}).
 */
DiscriminantPoly discriminant_poly_in_cn(const Digits &prefix);

} // namespace surdcf
