/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/rational.hpp"

#include "surdcf/error.hpp"

namespace surdcf {

Rational::Rational(const Integer &n, const Integer &d)
{
	if (sgn(d) == 0)
		throw DivisionByZero();
	q_ = mpq_class(n, d);
	q_.canonicalize();
}

Rational operator/(const Rational &a, const Rational &b)
{
	if (b.sign() == 0)
		throw DivisionByZero();
	return Rational::from_mpq(a.q_ / b.q_);
}

std::string Rational::str() const
{
	if (is_integer())
		return to_string(num());
	return to_string(num()) + "/" + to_string(den());
}

bool is_rational_square(const Rational &r)
{
	// reduced u/w with gcd(u, w) = 1 is a square iff u and w both are
	return r.sign() >= 0 && is_perfect_square(r.num()) && is_perfect_square(r.den());
}

} // namespace surdcf
