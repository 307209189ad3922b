/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/evaluate.hpp"

#include "surdcf/error.hpp"

#include <stdexcept>

namespace surdcf {

namespace {

Digits zero_prefixed(const Digits &repeating)
{
	if (repeating.empty())
		throw std::invalid_argument("empty repeating block");
	check_digits(repeating, 0);
	Digits digits;
	digits.reserve(repeating.size() + 1);
	digits.push_back(0);
	digits.insert(digits.end(), repeating.begin(), repeating.end());
	return digits;
}

} // namespace

bool Window::contains(const QuadIrr &x) const
{
	if (lo && compare_to_rational(x, *lo) != Order::Greater)
		return false;
	if (hi && compare_to_rational(x, *hi) != Order::Less)
		return false;
	return true;
}

QuadraticEquation fixed_point_equation(const MobiusMap &m)
{
	return {m.q(), m.q_prev() - m.p(), -m.p_prev()};
}

QuadIrr mobius_fixed_point(const MobiusMap &m, const Window &window)
{
	QuadraticEquation eq = fixed_point_equation(m);
	if (sgn(eq.a2) == 0)
		throw RationalFixedPoint("fixed-point equation is linear");
	Integer disc = eq.discriminant();
	if (sgn(disc) < 0)
		throw NoRootInWindow("fixed-point equation has no real roots");
	if (is_perfect_square(disc))
		throw RationalFixedPoint("discriminant " + to_string(disc) + " is a perfect square");

	// t = -a1/(2 a2) ± sqrt(disc / (2 a2)^2)
	Rational two_a2 = Rational(2 * eq.a2);
	Rational rat = Rational(-eq.a1) / two_a2;
	Rational radicand = Rational(disc) / (two_a2 * two_a2);
	QuadIrr plus = make_quad_irr(rat, Sign::Plus, radicand);
	QuadIrr minus = conjugate(plus);
	bool in_plus = window.contains(plus);
	bool in_minus = window.contains(minus);
	if (in_plus && in_minus)
		throw TwoRootsInWindow("both fixed points lie in the window");
	if (!in_plus && !in_minus)
		throw NoRootInWindow("no fixed point lies in the window");
	return in_plus ? plus : minus;
}

QuadraticEquation zero_periodic_equation(const Digits &repeating)
{
	ConvergentTable t = build_convergents(zero_prefixed(repeating));
	auto n = t.size() - 1;
	// x = [0; c_1..c_n, 1/x]  =>  x = (p_{n-1} x + p_n) / (q_{n-1} x + q_n)
	return fixed_point_equation(MobiusMap(t.p(n - 1), t.p(n), t.q(n - 1), t.q(n)));
}

QuadIrr evaluate_zero_periodic(const Digits &repeating)
{
	ConvergentTable t = build_convergents(zero_prefixed(repeating));
	auto n = t.size() - 1;
	return mobius_fixed_point(MobiusMap(t.p(n - 1), t.p(n), t.q(n - 1), t.q(n)), Window::unit());
}

QuadIrr evaluate_purely_periodic(const Digits &repeating)
{
	if (repeating.empty())
		throw std::invalid_argument("empty repeating block");
	check_digits(repeating, 0);
	ConvergentTable t = build_convergents(repeating);
	return mobius_fixed_point(t.tail_map(t.size() - 1), Window::above_one());
}

QuadIrr evaluate_general(const CFExpansion &cf)
{
	validate(cf);
	if (cf.repeating.empty())
		throw std::invalid_argument("finite continued fractions are rational");
	QuadIrr y = evaluate_purely_periodic(cf.repeating);
	ConvergentTable t = build_convergents(cf.initial);
	return mobius_apply(t.tail_map(t.size() - 1), y);
}

} // namespace surdcf
