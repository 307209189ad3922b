/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "support/oracles.hpp"
#include "surdcf/error.hpp"
#include "surdcf/integer.hpp"
#include "surdcf/rational.hpp"

#include <doctest.h>

#include <random>

using namespace surdcf;

TEST_CASE("isqrt examples")
{
	CHECK(isqrt(0).root == 0);
	CHECK(isqrt(0).exact);

	// linear-scan oracle
	REQUIRE(oracle::scan_isqrt(837) == 28);
	REQUIRE(oracle::scan_isqrt(1089) == 33);
	auto r = isqrt(837);
	CHECK(r.root == 28);
	CHECK_FALSE(r.exact);
	r = isqrt(1089);
	CHECK(r.root == 33);
	CHECK(r.exact);

	CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt agrees with linear scan for small n")
{
	for (unsigned long n = 0; n <= 5000; ++n) {
		auto r = isqrt(n);
		unsigned long s = oracle::scan_isqrt(n);
		REQUIRE(r.root == s);
		REQUIRE(r.exact == (s * s == n));
	}
}

TEST_CASE("isqrt brackets random values up to 2^128")
{
	std::mt19937_64 rng(20261017);
	gmp_randclass grng(gmp_randinit_default);
	grng.seed(42);
	for (int i = 0; i < 5000; ++i) {
		unsigned long bits = 1 + rng() % 128;
		Integer n = grng.get_z_bits(bits);
		auto r = isqrt(n);
		Integer next = r.root + 1;
		REQUIRE(r.root * r.root <= n);
		REQUIRE(n < next * next);
		Integer ref;
		mpz_sqrt(ref.get_mpz_t(), n.get_mpz_t());
		REQUIRE(r.root == ref);
		// perfect squares are detected
		Integer sq = n * n;
		REQUIRE(isqrt(sq).exact);
		REQUIRE(isqrt(sq).root == n);
		if (sgn(n) > 0)
			REQUIRE_FALSE(isqrt(sq + 1).exact);
	}
}

TEST_CASE("floor division and residues")
{
	CHECK(floor_div(7, 2) == 3);
	CHECK(floor_div(-7, 2) == -4);
	CHECK(floor_div(7, -2) == -4);
	CHECK(floor_div(-7, -2) == 3);
	CHECK(mod_floor(-1, 7) == 6);
	CHECK(mod_floor(1156, 77) == 1);
}

TEST_CASE("rational arithmetic examples")
{
	CHECK(Rational(5, 7) - Rational(3, 7) == Rational(2, 7));
	CHECK((Rational(5, 7) - Rational(3, 7)).str() == "2/7");
	Rational a(-19, 14);
	CHECK(a + Rational(0) == a);
	CHECK(Rational(15, 34) * Rational(34, 15) == Rational(1));
	CHECK((Rational(15, 34) * Rational(34, 15)).str() == "1");

	CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
	CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational normal form")
{
	Rational r(6, -4);
	CHECK(r.num() == -3);
	CHECK(r.den() == 2);
	CHECK(r.str() == "-3/2");
	CHECK(Rational(0, -5).str() == "0");
	CHECK(Rational(-4, 3).floor() == -2);
	CHECK(Rational(-4, 3).frac() == Rational(2, 3));
	CHECK(Rational(2, 7).frac() == Rational(2, 7));
}

TEST_CASE("rational results are reduced (naive gcd reconstruction)")
{
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<long> dist(-100000, 100000);
	auto draw = [&] {
		long d = 0;
		while (d == 0)
			d = dist(rng);
		return Rational(dist(rng), d);
	};
	for (int i = 0; i < 20000; ++i) {
		Rational a = draw(), b = draw();
		for (const Rational &c : {a + b, a - b, a * b, b.sign() != 0 ? a / b : a}) {
			REQUIRE(c.den() >= 1);
			REQUIRE(oracle::naive_gcd(c.num(), c.den()) == 1);
		}
		// exactness: cross-multiplied identities over raw integers
		Rational s = a + b;
		REQUIRE(s.num() * a.den() * b.den() == (a.num() * b.den() + b.num() * a.den()) * s.den());
		Rational p = a * b;
		REQUIRE(p.num() * a.den() * b.den() == a.num() * b.num() * p.den());
	}
}

TEST_CASE("rational squares")
{
	CHECK(is_rational_square(Rational(4, 9)));
	CHECK(is_rational_square(Rational(0)));
	CHECK_FALSE(is_rational_square(Rational(837, 196)));
	CHECK_FALSE(is_rational_square(Rational(39, 44)));
	CHECK_FALSE(is_rational_square(Rational(-4, 9)));
	CHECK_FALSE(is_rational_square(Rational(8, 18) * Rational(2)));
	CHECK(is_rational_square(Rational(8, 18)));
}
