/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "support/oracles.hpp"
#include "surdcf/error.hpp"
#include "surdcf/evaluate.hpp"
#include "surdcf/expand.hpp"

#include <doctest.h>

using namespace surdcf;

namespace {

/// floor((P + sqrt(D))/Q) from a 256-bit enclosure.
Integer floor_oracle(const Integer &p, const Integer &q, const Integer &d)
{
	oracle::Interval e = oracle::enclose(from_surd_parts(Rational(p, q), Rational(Integer(1), q), Rational(d)));
	Integer lo, hi;
	mpfr_get_z(lo.get_mpz_t(), e.lo.get(), MPFR_RNDD);
	mpfr_get_z(hi.get_mpz_t(), e.hi.get(), MPFR_RNDD);
	REQUIRE(lo == hi);
	return lo;
}

bool same_stream(const CFExpansion &a, const CFExpansion &b, std::size_t n = 50)
{
	return digit_prefix(a, n) == digit_prefix(b, n);
}

} // namespace

TEST_CASE("exact_floor examples")
{
	CHECK(exact_floor(SurdState(0, 1, 2)) == 1);
	REQUIRE(floor_oracle(-19, 14, 837) == 0);
	CHECK(exact_floor(SurdState(-19, 14, 837)) == 0);

	SurdState s = SurdState::from_quad(make_quad_irr(0, Sign::Plus, Rational(39, 44)));
	Integer d0 = exact_floor(s);
	CHECK(d0 == 0);
	CHECK(exact_floor(s.next(d0)) == 1);
}

TEST_CASE("exact_floor against interval refinement, both signs of Q")
{
	std::mt19937_64 rng(17);
	std::uniform_int_distribution<long> pd(-500, 500), qd(1, 60), dd(2, 5000);
	int checked = 0;
	while (checked < 5000) {
		Integer d = dd(rng);
		if (is_perfect_square(d))
			continue;
		Integer p = pd(rng);
		Integer q = qd(rng) * (rng() % 2 ? 1 : -1);
		if (sgn(mod_floor(d - p * p, abs(q))) != 0)
			continue;
		REQUIRE(exact_floor(SurdState(p, q, d)) == floor_oracle(p, q, d));
		++checked;
	}
}

TEST_CASE("surd state validation")
{
	CHECK_THROWS_AS(SurdState(0, 1, 4), DegenerateRadicand);
	CHECK_THROWS_AS(SurdState(0, 1, 0), NonPositiveRadicand);
	CHECK_THROWS_AS(SurdState(0, 0, 2), std::invalid_argument);
	CHECK_THROWS_AS(SurdState(1, 3, 2), std::invalid_argument);
	QuadIrr x = make_quad_irr(Rational(-19, 14), Sign::Minus, Rational(837, 196));
	CHECK(SurdState::from_quad(x).value() == x);
}

TEST_CASE("expand examples")
{
	CHECK(expand(make_quad_irr(0, Sign::Plus, Rational(39, 44))) ==
	      CFExpansion{{0, 1}, {16, 11, 1, 3, 2, 3, 1, 11, 16, 2}});
	CHECK(expand(make_quad_irr(Rational(-19, 14), Sign::Plus, Rational(837, 196))) ==
	      CFExpansion{{0}, {1, 2, 2, 3}});
	CHECK(expand(make_quad_irr(0, Sign::Plus, 2)) == CFExpansion{{1}, {2}});
	// golden ratio keeps its integer part in the initial block
	CHECK(expand(make_quad_irr(Rational(1, 2), Sign::Plus, Rational(5, 4))) == CFExpansion{{1}, {1}});
	CHECK(expand(make_quad_irr(0, Sign::Minus, 2)) == CFExpansion{{-2, 1, 1}, {2}});
}

TEST_CASE("expand gives up after max_steps")
{
	QuadIrr x = make_quad_irr(0, Sign::Plus, Rational(39, 44));
	CHECK_THROWS_AS(expand(x, 5), PeriodTooLong);
	CHECK_NOTHROW(expand(x, 100));
}

TEST_CASE("expand inverts evaluation on random values")
{
	std::mt19937_64 rng(23);
	std::uniform_int_distribution<long> num(-80, 80), den(1, 8), rad(2, 300);
	for (int i = 0; i < 1500; ++i) {
		Rational r(rad(rng), den(rng));
		if (is_rational_square(r))
			continue;
		QuadIrr x = make_quad_irr(Rational(num(rng), den(rng)), rng() % 2 ? Sign::Plus : Sign::Minus, r);
		CFExpansion cf = expand(x);
		REQUIRE(evaluate_general(cf) == x);
		REQUIRE(canonicalize(cf) == cf);
		REQUIRE(oracle::spread(oracle::enclose(x), oracle::enclose_truncated(cf.initial, cf.repeating)) < 1e-40);
	}
}

TEST_CASE("canonicalize examples")
{
	CHECK(canonicalize({{0}, {1, 1}}) == CFExpansion{{0}, {1}});

	CFExpansion in{{0, 3}, {1, 2, 3}};
	CFExpansion out = canonicalize(in);
	CHECK(out == CFExpansion{{0}, {3, 1, 2}});
	CHECK(same_stream(in, out));

	CFExpansion canon{{0, 1}, {16, 11, 1, 3, 2, 3, 1, 11, 16, 2}};
	CHECK(canonicalize(canon) == canon);

	CHECK(canonicalize({{1, 2, 2, 2}, {2, 2}}) == CFExpansion{{1}, {2}});
	CHECK(canonicalize({{5, 1, 2, 1, 2}, {1, 2}}) == CFExpansion{{5}, {1, 2}});
}

TEST_CASE("canonicalize preserves the digit stream and is idempotent")
{
	std::mt19937_64 rng(31);
	for (int i = 0; i < 3000; ++i) {
		Digits block = oracle::random_block(rng, 3, 3);
		std::size_t reps = 1 + rng() % 3;
		Digits rep;
		for (std::size_t k = 0; k < reps; ++k)
			rep.insert(rep.end(), block.begin(), block.end());
		Digits init = oracle::random_block(rng, 4, 3);
		init.insert(init.begin(), Integer(0));
		CFExpansion cf{init, rep};
		CFExpansion c = canonicalize(cf);
		REQUIRE(same_stream(cf, c, 60));
		REQUIRE(canonicalize(c) == c);
		REQUIRE(primitive_period(c.repeating) == c.repeating);
		if (c.initial.size() > 1)
			REQUIRE(c.initial.back() != c.repeating.back());
	}
}
