/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/integer.hpp"

#include <gmpxx.h>

#include <compare>
#include <string>

namespace surdcf {

/**
 * Exact rational number, always stored reduced with a positive denominator.
 *
 * The sign lives in the numerator. Equality is therefore representational.
 */
class Rational {
public:
	Rational() = default;
	Rational(long v) : q_(v) {}
	Rational(const Integer &n) : q_(n) {}
	/// Throws DivisionByZero when d == 0.
	Rational(const Integer &n, const Integer &d);

	Integer num() const { return q_.get_num(); }
	Integer den() const { return q_.get_den(); }

	bool is_integer() const { return q_.get_den() == 1; }
	int sign() const { return ::sgn(q_); }

	Rational operator-() const { return from_mpq(-q_); }

	friend Rational operator+(const Rational &a, const Rational &b) { return from_mpq(a.q_ + b.q_); }
	friend Rational operator-(const Rational &a, const Rational &b) { return from_mpq(a.q_ - b.q_); }
	friend Rational operator*(const Rational &a, const Rational &b) { return from_mpq(a.q_ * b.q_); }
	/// Throws DivisionByZero when b == 0.
	friend Rational operator/(const Rational &a, const Rational &b);

	Rational &operator+=(const Rational &b) { return *this = *this + b; }
	Rational &operator-=(const Rational &b) { return *this = *this - b; }
	Rational &operator*=(const Rational &b) { return *this = *this * b; }
	Rational &operator/=(const Rational &b) { return *this = *this / b; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
			     : std::strong_ordering::equal;
	}

	Rational abs() const { return from_mpq(::abs(q_)); }
	Integer floor() const { return floor_div(num(), den()); }
	/// Fractional part in [0, 1).
	Rational frac() const { return *this - Rational(floor()); }

	/// "n/d", or "n" when d == 1.
	std::string str() const;

	const mpq_class &mpq() const noexcept { return q_; }

private:
	static Rational from_mpq(mpq_class q)
	{
		Rational r;
		r.q_ = std::move(q);
		return r;
	}

	mpq_class q_;
};

inline std::string to_string(const Rational &r) { return r.str(); }

/// True iff r >= 0 is the square of a rational.
bool is_rational_square(const Rational &r);

} // namespace surdcf
