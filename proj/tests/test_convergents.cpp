/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "support/oracles.hpp"
#include "surdcf/convergents.hpp"
#include "surdcf/error.hpp"

#include <doctest.h>

using namespace surdcf;

TEST_CASE("convergents of [0,1,2,2,3]")
{
	ConvergentTable t = build_convergents(Digits{0, 1, 2, 2, 3});
	REQUIRE(t.size() == 5);
	std::vector<long> p{1, 0, 1, 2, 5, 17}, q{0, 1, 1, 3, 7, 24};
	for (std::ptrdiff_t k = -1; k < t.size(); ++k) {
		CHECK(t.p(k) == p[static_cast<std::size_t>(k + 1)]);
		CHECK(t.q(k) == q[static_cast<std::size_t>(k + 1)]);
	}
	CHECK(t.convergent(2) == Rational(2, 3));
	CHECK(t.convergent(3) == Rational(5, 7));
}

TEST_CASE("convergents of [0,2,3,1,3,2,1]")
{
	ConvergentTable t = build_convergents(Digits{0, 2, 3, 1, 3, 2, 1});
	CHECK(t.p(4) == 15);
	CHECK(t.q(4) == 34);
	CHECK(t.p(5) == 34);
	CHECK(t.q(5) == 77);
}

TEST_CASE("base case")
{
	ConvergentTable t = build_convergents(Digits{0});
	CHECK(t.p(0) == 0);
	CHECK(t.q(0) == 1);
	CHECK(t.p(-1) == 1);
	CHECK(t.q(-1) == 0);
}

TEST_CASE("invalid digits")
{
	CHECK_THROWS_AS(build_convergents(Digits{0, 1, 0}), InvalidDigit);
	CHECK_THROWS_AS(build_convergents(Digits{3, -2}), InvalidDigit);
	CHECK_NOTHROW(build_convergents(Digits{-7, 1}));
	CHECK_THROWS_AS(build_convergents(Digits{}), std::invalid_argument);
}

TEST_CASE("table invariants against folded values")
{
	std::mt19937_64 rng(5);
	std::uniform_int_distribution<long> c0(-20, 20);
	for (int i = 0; i < 2000; ++i) {
		Digits d = oracle::random_block(rng, 12, 30);
		bool zero_lead = i % 2 == 0;
		d.insert(d.begin(), zero_lead ? Integer(0) : Integer(c0(rng)));
		ConvergentTable t = build_convergents(d);
		for (std::ptrdiff_t k = 0; k < t.size(); ++k) {
			Integer det = t.p(k) * t.q(k - 1) - t.q(k) * t.p(k - 1);
			REQUIRE(det == (k % 2 == 0 ? -1 : 1));
			REQUIRE(oracle::naive_gcd(t.p(k), t.q(k)) == 1);
			Digits head(d.begin(), d.begin() + k + 1);
			REQUIRE(mpq_class(t.p(k), t.q(k)) == oracle::fold_cf(head));
			if (zero_lead) {
				REQUIRE(t.q(k - 1) <= t.q(k));
				if (k >= 2)
					REQUIRE(t.q(k - 1) < t.q(k));
				REQUIRE(sgn(t.p(k)) >= 0);
				REQUIRE(t.p(k) <= t.q(k));
			}
		}
	}
}
