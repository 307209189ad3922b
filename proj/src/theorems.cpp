/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/theorems.hpp"

#include <stdexcept>

namespace surdcf {

namespace {

ConvergentTable zero_table(const Digits &block, bool allow_empty = false)
{
	if (block.empty() && !allow_empty)
		throw std::invalid_argument("empty repeating block");
	check_digits(block, 0);
	Digits digits;
	digits.reserve(block.size() + 1);
	digits.push_back(0);
	digits.insert(digits.end(), block.begin(), block.end());
	return build_convergents(digits);
}

struct EpsilonParts {
	Integer p_n1, q_n2, q_n1;
};

EpsilonParts epsilon_parts(const ConvergentTable &t)
{
	auto n = t.size() - 1;
	return {t.p(n - 1), t.q(n - 2), t.q(n - 1)};
}

} // namespace

Rational epsilon(const Digits &repeating)
{
	auto e = epsilon_parts(zero_table(repeating));
	return Rational(e.p_n1 - e.q_n2, e.q_n1);
}

bool is_palindromic_prefix(const Digits &repeating)
{
	if (repeating.empty())
		throw std::invalid_argument("empty repeating block");
	std::size_t m = repeating.size() - 1;
	for (std::size_t i = 0; i < m / 2; ++i)
		if (repeating[i] != repeating[m - 1 - i])
			return false;
	return true;
}

bool congruence_check(const Digits &repeating)
{
	ConvergentTable t = zero_table(repeating);
	auto n = t.size() - 1;
	const Integer &mod = t.q(n - 1);
	Integer lhs = mod_floor(t.p(n - 1) * t.p(n - 1), mod);
	Integer rhs = mod_floor(Integer(n % 2 == 0 ? 1 : -1), mod);
	return lhs == rhs;
}

const char *to_string(FracCase c) { return c == FracCase::PGeQ ? "p_ge_q" : "p_lt_q"; }

TheoremReport theorem1_report(const Digits &repeating)
{
	auto e = epsilon_parts(zero_table(repeating));
	TheoremReport r;
	r.block = repeating;
	r.epsilon = Rational(e.p_n1 - e.q_n2, e.q_n1);
	r.two_a = Rational(-repeating.back()) + r.epsilon;
	if (e.p_n1 >= e.q_n2) {
		r.case_flag = FracCase::PGeQ;
		r.frac_two_a = r.epsilon;
	} else {
		r.case_flag = FracCase::PLtQ;
		r.frac_two_a = r.epsilon + Rational(1);
	}
	r.palindromic = is_palindromic_prefix(repeating);
	r.congruence_holds = congruence_check(repeating);
	r.epsilon_zero = r.epsilon.sign() == 0;
	return r;
}

Theorem2Assertions theorem2_report(const Digits &repeating)
{
	TheoremReport r = theorem1_report(repeating);
	return {r.two_a.is_integer(), r.two_a == Rational(-repeating.back()), r.palindromic};
}

DiscriminantPoly discriminant_poly_in_cn(const Digits &prefix)
{
	ConvergentTable t = zero_table(prefix, true);
	// the table ends at index n-1
	auto k = t.size() - 1;
	const Integer &q1 = t.q(k);
	const Integer &p1 = t.p(k);
	const Integer &q2 = t.q(k - 1);
	const Integer &p2 = t.p(k - 1);
	Integer d = q2 - p1;
	return {q1 * q1, 2 * q1 * (q2 + p1), d * d + 4 * q1 * p2};
}

} // namespace surdcf
