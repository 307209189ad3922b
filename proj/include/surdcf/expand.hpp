/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/cf_expansion.hpp"
#include "surdcf/quad_irr.hpp"

#include <cstddef>

namespace surdcf {

/// (P + sqrt(D)) / Q with D > 0 not a square and Q | D - P^2.
class SurdState {
public:
	/// Throws DegenerateRadicand / NonPositiveRadicand for bad D,
	/// std::invalid_argument for Q == 0 or Q not dividing D - P^2.
	SurdState(Integer p, Integer q, Integer d);

	/// Scales x = a + s sqrt(r) into integer form satisfying the divisibility condition.
	static SurdState from_quad(const QuadIrr &x);

	const Integer &P() const noexcept { return p_; }
	const Integer &Q() const noexcept { return q_; }
	const Integer &D() const noexcept { return d_; }

	QuadIrr value() const;

	/// State of the complete quotient 1 / (x - digit).
	SurdState next(const Integer &digit) const;

	friend bool operator==(const SurdState &, const SurdState &) = default;

private:
	struct Unchecked {};
	SurdState(Integer p, Integer q, Integer d, Unchecked) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}

	Integer p_, q_, d_;
};

/// floor((P + sqrt(D)) / Q)
Integer exact_floor(const SurdState &s);

inline constexpr std::size_t default_max_steps = 10000;

/**
 * Eventually periodic expansion of x, canonicalized.
 *
 * Throws PeriodTooLong when no surd state repeats within max_steps digits.
 */
CFExpansion expand(const QuadIrr &x, std::size_t max_steps = default_max_steps);

} // namespace surdcf
