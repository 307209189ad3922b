/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/integer.hpp"

#include <stdexcept>

namespace surdcf {

namespace {

bool brackets(const Integer &r, const Integer &n)
{
	Integer next = r + 1;
	return r * r <= n && n < next * next;
}

Integer bisect_root(const Integer &n)
{
	Integer lo = 0;
	Integer hi = n + 1;
	// invariant: lo^2 <= n < hi^2
	while (hi - lo > 1) {
		Integer mid = (lo + hi) / 2;
		if (mid * mid <= n)
			lo = mid;
		else
			hi = mid;
	}
	return lo;
}

} // namespace

IsqrtResult isqrt(const Integer &n)
{
	if (sgn(n) < 0)
		throw std::domain_error("isqrt of a negative integer");
	if (n < 2)
		return {n, true};

	// Newton from an overestimate: 2^ceil(bits/2) > sqrt(n).
	std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
	Integer x = 1;
	mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), (bits + 1) / 2);
	for (;;) {
		Integer y = (x + n / x) / 2;
		if (y >= x)
			break;
		x = std::move(y);
	}
	if (!brackets(x, n))
		x = bisect_root(n);
	bool exact = x * x == n;
	return {std::move(x), exact};
}

bool is_perfect_square(const Integer &n)
{
	return sgn(n) >= 0 && isqrt(n).exact;
}

Integer floor_div(const Integer &n, const Integer &d)
{
	if (sgn(d) == 0)
		throw std::domain_error("floor_div by zero");
	Integer q;
	mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
	return q;
}

Integer mod_floor(const Integer &n, const Integer &m)
{
	Integer r;
	mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
	return r;
}

std::string to_string(const Integer &n) { return n.get_str(); }

} // namespace surdcf
