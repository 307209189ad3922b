/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/expand.hpp"

#include "surdcf/error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <stdexcept>
#include <utility>

namespace surdcf {

SurdState::SurdState(Integer p, Integer q, Integer d)
: p_(std::move(p)), q_(std::move(q)), d_(std::move(d))
{
	if (sgn(d_) <= 0)
		throw NonPositiveRadicand("surd state radicand must be positive");
	if (is_perfect_square(d_))
		throw DegenerateRadicand("surd state radicand " + to_string(d_) + " is a perfect square");
	if (sgn(q_) == 0)
		throw std::invalid_argument("surd state denominator is zero");
	if (sgn(mod_floor(d_ - p_ * p_, abs(q_))) != 0)
		throw std::invalid_argument("surd state: Q does not divide D - P^2");
}

SurdState SurdState::from_quad(const QuadIrr &x)
{
	// a = n/d, r = u/w:  x = (n w ± sqrt(u w d^2)) / (d w)
	Integer n = x.rat().num(), d = x.rat().den();
	Integer u = x.radicand().num(), w = x.radicand().den();
	Integer P = n * w;
	Integer Q = d * w;
	Integer D = u * w * d * d;
	if (x.sign() == Sign::Minus) {
		P = -P;
		Q = -Q;
	}
	if (sgn(mod_floor(D - P * P, abs(Q))) != 0) {
		Integer aq = abs(Q);
		P *= aq;
		D *= Q * Q;
		Q *= aq;
	}
	return SurdState(std::move(P), std::move(Q), std::move(D), Unchecked{});
}

QuadIrr SurdState::value() const
{
	return from_surd_parts(Rational(p_, q_), Rational(Integer(1), q_), Rational(d_));
}

SurdState SurdState::next(const Integer &digit) const
{
	Integer p = digit * q_ - p_;
	Integer q = (d_ - p * p) / q_;
	return SurdState(std::move(p), std::move(q), d_, Unchecked{});
}

Integer exact_floor(const SurdState &s)
{
	// sqrt(D) lies strictly between t and t + 1
	Integer t = isqrt(s.D()).root;
	if (sgn(s.Q()) > 0)
		return floor_div(s.P() + t, s.Q());
	// floor(-y) = -ceil(y) = -floor(y) - 1 for irrational y
	return -floor_div(s.P() + t, -s.Q()) - 1;
}

CFExpansion expand(const QuadIrr &x, std::size_t max_steps)
{
	SurdState state = SurdState::from_quad(x);
	std::map<std::pair<Integer, Integer>, std::size_t> seen;
	Digits digits;
	for (std::size_t step = 0; step < max_steps; ++step) {
		auto [it, inserted] = seen.emplace(std::make_pair(state.P(), state.Q()), step);
		if (!inserted) {
			auto start = static_cast<std::ptrdiff_t>(it->second);
			CFExpansion cf{Digits(digits.begin(), digits.begin() + start),
				       Digits(digits.begin() + start, digits.end())};
			if (cf.initial.empty()) {
				// b_0 always sits in the initial block
				cf.initial.push_back(cf.repeating.front());
				std::rotate(cf.repeating.begin(), cf.repeating.begin() + 1, cf.repeating.end());
			}
			return canonicalize(cf);
		}
		Integer digit = exact_floor(state);
		state = state.next(digit);
		digits.push_back(std::move(digit));
	}
	throw PeriodTooLong("no period found within " + std::to_string(max_steps) + " steps");
}

} // namespace surdcf
