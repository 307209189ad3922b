/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/quad_irr.hpp"

#include "surdcf/error.hpp"

#include <stdexcept>

namespace surdcf {

QuadIrr make_quad_irr(const Rational &a, Sign s, const Rational &r)
{
	if (r.sign() <= 0)
		throw NonPositiveRadicand("radicand " + r.str() + " is not positive");
	if (is_rational_square(r))
		throw DegenerateRadicand("radicand " + r.str() + " is the square of a rational");
	return QuadIrr(a, s, r);
}

QuadIrr from_surd_parts(const Rational &a, const Rational &c, const Rational &r)
{
	if (c.sign() == 0)
		throw DegenerateRadicand("irrational part vanished");
	return QuadIrr(a, c.sign() > 0 ? Sign::Plus : Sign::Minus, c * c * r);
}

std::string QuadIrr::str() const
{
	std::string root = "sqrt(" + radicand_.str() + ")";
	if (rat_.sign() == 0)
		return sign_ == Sign::Plus ? root : "-" + root;
	return rat_.str() + (sign_ == Sign::Plus ? " + " : " - ") + root;
}

QuadIrr conjugate(const QuadIrr &x) { return make_quad_irr(x.rat(), flip(x.sign()), x.radicand()); }

QuadIrr negate(const QuadIrr &x) { return make_quad_irr(-x.rat(), flip(x.sign()), x.radicand()); }

QuadIrr shift(const QuadIrr &x, const Rational &t) { return make_quad_irr(x.rat() + t, x.sign(), x.radicand()); }

int sign_of(const QuadIrr &x)
{
	int s = to_int(x.sign());
	int a = x.rat().sign();
	if (a == 0 || a == s)
		return s;
	// opposite signs: the larger magnitude wins; a^2 != r since r is no square
	return x.rat() * x.rat() > x.radicand() ? a : s;
}

Order compare_to_rational(const QuadIrr &x, const Rational &t)
{
	return sign_of(shift(x, -t)) > 0 ? Order::Greater : Order::Less;
}

MobiusMap::MobiusMap(Integer p, Integer p_prev, Integer q, Integer q_prev)
: p_(std::move(p)), p_prev_(std::move(p_prev)), q_(std::move(q)), q_prev_(std::move(q_prev))
{
	if (sgn(determinant()) == 0)
		throw std::invalid_argument("singular Möbius map");
}

MobiusMap compose(const MobiusMap &outer, const MobiusMap &inner)
{
	return {
		outer.p() * inner.p() + outer.p_prev() * inner.q(),
		outer.p() * inner.p_prev() + outer.p_prev() * inner.q_prev(),
		outer.q() * inner.p() + outer.q_prev() * inner.q(),
		outer.q() * inner.p_prev() + outer.q_prev() * inner.q_prev(),
	};
}

QuadIrr mobius_apply(const MobiusMap &m, const QuadIrr &x)
{
	// (n0 + n1 w) / (m0 + m1 w) with w = s*sqrt(r), multiplied by (m0 - m1 w)
	Rational w_coeff = to_int(x.sign());
	const Rational &a = x.rat();
	const Rational &r = x.radicand();
	Rational n0 = Rational(m.p()) * a + Rational(m.p_prev());
	Rational n1 = Rational(m.p()) * w_coeff;
	Rational m0 = Rational(m.q()) * a + Rational(m.q_prev());
	Rational m1 = Rational(m.q()) * w_coeff;

	Rational den = m0 * m0 - m1 * m1 * r;
	if (den.sign() == 0)
		throw std::logic_error("mobius_apply: vanishing denominator for an irrational argument");
	Rational rat = (n0 * m0 - n1 * m1 * r) / den;
	Rational coeff = (n1 * m0 - n0 * m1) / den;
	if (coeff.sign() == 0)
		throw std::logic_error("mobius_apply: rational image under a nonsingular map");
	return from_surd_parts(rat, coeff, r);
}

} // namespace surdcf
