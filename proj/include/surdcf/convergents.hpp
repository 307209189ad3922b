/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/integer.hpp"
#include "surdcf/quad_irr.hpp"
#include "surdcf/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace surdcf {

using Digit = Integer;
using Digits = std::vector<Digit>;

/**
 * Convergent numerators and denominators p_k, q_k for k = -1 .. size()-1.
 *
 * p_{-1} = 1, q_{-1} = 0, p_0 = c_0, q_0 = 1 and
 * p_k = c_k p_{k-1} + p_{k-2}, q_k = c_k q_{k-1} + q_{k-2}.
 */
class ConvergentTable {
public:
	/// Number of digits, i.e. the largest valid index plus one.
	std::ptrdiff_t size() const noexcept { return static_cast<std::ptrdiff_t>(digits_.size()); }

	/// k in [-1, size()).
	const Integer &p(std::ptrdiff_t k) const { return p_.at(static_cast<std::size_t>(k + 1)); }
	const Integer &q(std::ptrdiff_t k) const { return q_.at(static_cast<std::size_t>(k + 1)); }
	Rational convergent(std::ptrdiff_t k) const { return Rational(p(k), q(k)); }

	const Digits &digits() const noexcept { return digits_; }

	/// Map t -> (p_k t + p_{k-1}) / (q_k t + q_{k-1}), k >= 0.
	MobiusMap tail_map(std::ptrdiff_t k) const { return {p(k), p(k - 1), q(k), q(k - 1)}; }

private:
	friend ConvergentTable build_convergents(std::span<const Digit> digits);

	Digits digits_;
	std::vector<Integer> p_;
	std::vector<Integer> q_;
};

/// Throws std::invalid_argument on empty input, InvalidDigit when a digit past position 0 is < 1.
ConvergentTable build_convergents(std::span<const Digit> digits);

/// Throws InvalidDigit naming the first offending position.
void check_digits(std::span<const Digit> digits, std::size_t first_checked = 1);

} // namespace surdcf
