/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/integer.hpp"
#include "surdcf/rational.hpp"

#include <string>

namespace surdcf {

enum class Sign : int { Minus = -1, Plus = 1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int to_int(Sign s) { return static_cast<int>(s); }

enum class Order { Less, Greater };

/**
 * Quadratic irrational a + s*sqrt(r).
 *
 * a is the rational part, r > 0 a rational that is not the square of a
 * rational, s the sign of the irrational part. Since a and sqrt(r) are
 * determined by the value, the triple (a, s, r) is unique per value and
 * equality is equality of triples.
 */
class QuadIrr {
public:
	const Rational &rat() const noexcept { return rat_; }
	const Rational &radicand() const noexcept { return radicand_; }
	Sign sign() const noexcept { return sign_; }

	/// "a + sqrt(r)", "a - sqrt(r)", or "[-]sqrt(r)" when a == 0.
	std::string str() const;

	friend bool operator==(const QuadIrr &, const QuadIrr &) = default;

private:
	QuadIrr(Rational a, Sign s, Rational r) : rat_(std::move(a)), radicand_(std::move(r)), sign_(s) {}

	friend QuadIrr make_quad_irr(const Rational &, Sign, const Rational &);
	friend QuadIrr from_surd_parts(const Rational &, const Rational &, const Rational &);

	Rational rat_;
	Rational radicand_;
	Sign sign_;
};

/// Throws NonPositiveRadicand (r <= 0) or DegenerateRadicand (r a rational square).
QuadIrr make_quad_irr(const Rational &a, Sign s, const Rational &r);

/**
 * Builds a + c*sqrt(r) for a nonzero rational coefficient c, folding c into
 * the radicand. r must already be a valid radicand; throws DegenerateRadicand
 * when c == 0.
 */
QuadIrr from_surd_parts(const Rational &a, const Rational &c, const Rational &r);

QuadIrr conjugate(const QuadIrr &x);
QuadIrr negate(const QuadIrr &x);
/// x + t
QuadIrr shift(const QuadIrr &x, const Rational &t);

/// Exact sign of the value; never zero.
int sign_of(const QuadIrr &x);
Order compare_to_rational(const QuadIrr &x, const Rational &t);

/// t -> (p*t + p_prev) / (q*t + q_prev) with p*q_prev - q*p_prev != 0.
class MobiusMap {
public:
	/// Throws std::invalid_argument for a singular map.
	MobiusMap(Integer p, Integer p_prev, Integer q, Integer q_prev);

	static MobiusMap identity() { return {1, 0, 0, 1}; }
	static MobiusMap reciprocal() { return {0, 1, 1, 0}; }

	const Integer &p() const noexcept { return p_; }
	const Integer &p_prev() const noexcept { return p_prev_; }
	const Integer &q() const noexcept { return q_; }
	const Integer &q_prev() const noexcept { return q_prev_; }

	Integer determinant() const { return p_ * q_prev_ - q_ * p_prev_; }

	friend bool operator==(const MobiusMap &, const MobiusMap &) = default;

private:
	Integer p_, p_prev_, q_, q_prev_;
};

/// (outer ∘ inner)(t) = outer(inner(t))
MobiusMap compose(const MobiusMap &outer, const MobiusMap &inner);

QuadIrr mobius_apply(const MobiusMap &m, const QuadIrr &x);

inline QuadIrr reciprocal(const QuadIrr &x) { return mobius_apply(MobiusMap::reciprocal(), x); }

} // namespace surdcf
