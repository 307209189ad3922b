/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/cf_expansion.hpp"
#include "surdcf/quad_irr.hpp"

#include <optional>

namespace surdcf {

/// Open interval (lo, hi); a missing endpoint is infinite.
struct Window {
	std::optional<Rational> lo;
	std::optional<Rational> hi;

	bool contains(const QuadIrr &x) const;

	static Window unit() { return {Rational(0), Rational(1)}; }
	static Window above_one() { return {Rational(1), std::nullopt}; }
};

/// a2*x^2 + a1*x + a0 = 0 with integer coefficients.
struct QuadraticEquation {
	Integer a2, a1, a0;

	Integer discriminant() const { return a1 * a1 - 4 * a2 * a0; }

	friend bool operator==(const QuadraticEquation &, const QuadraticEquation &) = default;
};

/// q t^2 + (q_prev - p) t - p_prev = 0, the fixed-point equation of m.
QuadraticEquation fixed_point_equation(const MobiusMap &m);

/**
 * The unique fixed point of m inside window.
 *
 * Throws RationalFixedPoint when the fixed points are rational,
 * NoRootInWindow / TwoRootsInWindow when the window does not isolate one
 * irrational root.
 */
QuadIrr mobius_fixed_point(const MobiusMap &m, const Window &window);

/// q_{n-1} x^2 + (q_n - p_{n-1}) x - p_n = 0 for x = [0; (c_1, ..., c_n)].
QuadraticEquation zero_periodic_equation(const Digits &repeating);

/// x = [0; (c_1, ..., c_n)], 0 < x < 1.
QuadIrr evaluate_zero_periodic(const Digits &repeating);

/// y = [(c_1, ..., c_n)], y > 1.
QuadIrr evaluate_purely_periodic(const Digits &repeating);

/// [b_0; ..., b_m, (c_1, ..., c_n)]
QuadIrr evaluate_general(const CFExpansion &cf);

} // namespace surdcf
