/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/enumerate.hpp"

#include "surdcf/evaluate.hpp"
#include "surdcf/expand.hpp"
#include "surdcf/theorems.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>

namespace surdcf {

namespace {

bool in_open_unit(const QuadIrr &x)
{
	return compare_to_rational(x, Rational(0)) == Order::Greater &&
	       compare_to_rational(x, Rational(1)) == Order::Less;
}

struct Partial {
	std::vector<Violation> violations;
	std::size_t blocks = 0;
	std::size_t epsilon_zero = 0;
	std::size_t palindromic = 0;
};

/// Prefix number idx among those of length len, digits 1..base, lexicographic.
Digits prefix_at(unsigned len, std::size_t idx, unsigned base)
{
	Digits out(len);
	for (unsigned i = len; i-- > 0;) {
		out[i] = static_cast<unsigned long>(idx % base + 1);
		idx /= base;
	}
	return out;
}

void check_group(const Digits &prefix, unsigned max_digit, Partial &acc)
{
	Digits block = prefix;
	block.push_back(0);
	std::optional<Rational> first_eps;
	for (unsigned cn = 1; cn <= max_digit; ++cn) {
		block.back() = cn;
		++acc.blocks;
		try {
			for (auto &prop : check_block(block))
				acc.violations.push_back({block, std::move(prop)});
		} catch (const std::exception &) {
			acc.violations.push_back({block, "EXCEPTION"});
			continue;
		}
		Rational eps = epsilon(block);
		if (!first_eps)
			first_eps = eps;
		else if (eps != *first_eps)
			acc.violations.push_back({block, "P2"});
		if (eps.sign() == 0)
			++acc.epsilon_zero;
		if (is_palindromic_prefix(block))
			++acc.palindromic;
	}
}

} // namespace

std::vector<std::string> check_block(const Digits &block)
{
	std::vector<std::string> bad;
	auto fail = [&](const char *p) {
		if (std::find(bad.begin(), bad.end(), p) == bad.end())
			bad.emplace_back(p);
	};
	const auto n = static_cast<std::ptrdiff_t>(block.size());
	const Integer &cn = block.back();

	TheoremReport rep = theorem1_report(block);
	QuadIrr x = evaluate_zero_periodic(block);

	if (rep.epsilon.abs() >= Rational(1))
		fail("P1");
	if (x.rat() * Rational(2) != Rational(-cn) + rep.epsilon || rep.two_a != x.rat() * Rational(2))
		fail("P3");
	if (!theorem2_report(block).consistent() || rep.palindromic != rep.congruence_holds ||
	    rep.congruence_holds != rep.epsilon_zero || rep.epsilon_zero != rep.palindromic)
		fail("P4");

	Digits digits{0};
	digits.insert(digits.end(), block.begin(), block.end());
	ConvergentTable t = build_convergents(digits);
	const Integer &mod = t.q(n - 1);
	if (mod_floor(t.p(n - 1) * t.q(n - 2), mod) != mod_floor(Integer(n % 2 == 0 ? 1 : -1), mod))
		fail("P5");
	for (std::ptrdiff_t k = 0; k < t.size(); ++k) {
		Integer det = t.p(k) * t.q(k - 1) - t.q(k) * t.p(k - 1);
		if (det != (k % 2 == 0 ? -1 : 1))
			fail("P6");
	}

	CFExpansion back = expand(x);
	if (back != CFExpansion{{0}, primitive_period(block)} || evaluate_general(back) != x)
		fail("P7");

	QuadIrr y = evaluate_purely_periodic(block);
	if (reciprocal(x) != y || reciprocal(y) != x)
		fail("P8");

	QuadIrr yc = conjugate(y);
	if (!in_open_unit(x) || compare_to_rational(y, Rational(1)) != Order::Greater ||
	    compare_to_rational(yc, Rational(-1)) != Order::Greater || sign_of(yc) != -1)
		fail("P9");

	Rational whole = rep.two_a - rep.frac_two_a;
	bool frac_ok = rep.frac_two_a.sign() >= 0 && rep.frac_two_a < Rational(1) && whole.is_integer();
	if (rep.case_flag == FracCase::PGeQ)
		frac_ok = frac_ok && rep.frac_two_a == rep.epsilon;
	else
		frac_ok = frac_ok && rep.frac_two_a == rep.epsilon + Rational(1);
	if (!frac_ok)
		fail("P10");

	Digits prefix(block.begin(), block.end() - 1);
	Integer disc = discriminant_poly_in_cn(prefix).at(cn);
	const Integer &q1 = t.q(n - 1);
	if (disc != zero_periodic_equation(block).discriminant() ||
	    x.radicand() != Rational(disc, 4 * q1 * q1))
		fail("P11");
	return bad;
}

std::vector<SmokeResult> smoke_examples()
{
	std::vector<SmokeResult> out;
	auto run = [&](const char *input, Digits block, const Rational &two_a, const Rational &eps) {
		TheoremReport r = theorem1_report(block);
		out.push_back({input, r.two_a.str(), r.epsilon.str(), r.two_a == two_a && r.epsilon == eps});
	};
	run("[0; (1,2,2,3)]", {1, 2, 2, 3}, Rational(-19, 7), Rational(2, 7));
	run("[0; (2,3,1,3,2,1)]", {2, 3, 1, 3, 2, 1}, Rational(-1), Rational(0));
	return out;
}

EnumerationReport run_enumeration(unsigned max_len, unsigned max_digit, unsigned workers)
{
	if (max_len < 1 || max_digit < 1)
		throw std::invalid_argument("max_len and max_digit must be >= 1");
	auto t0 = std::chrono::steady_clock::now();

	EnumerationReport rep;
	rep.max_len = max_len;
	rep.max_digit = max_digit;
	rep.smoke = smoke_examples();
	for (const auto &s : rep.smoke)
		if (!s.ok)
			rep.violations.push_back({{}, "SMOKE"});

	// (prefix length, index) pairs in global order
	std::vector<std::pair<unsigned, std::size_t>> groups;
	std::size_t count = 1;
	for (unsigned len = 0; len < max_len; ++len) {
		for (std::size_t i = 0; i < count; ++i)
			groups.emplace_back(len, i);
		count *= max_digit;
	}

	workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(groups.size())));
	std::vector<Partial> parts(workers);
	auto work = [&](unsigned w) {
		std::size_t lo = groups.size() * w / workers;
		std::size_t hi = groups.size() * (w + 1) / workers;
		for (std::size_t g = lo; g < hi; ++g)
			check_group(prefix_at(groups[g].first, groups[g].second, max_digit), max_digit, parts[w]);
	};
	if (workers == 1) {
		work(0);
	} else {
		std::vector<std::jthread> pool;
		for (unsigned w = 0; w < workers; ++w)
			pool.emplace_back(work, w);
	}

	for (auto &p : parts) {
		rep.blocks_checked += p.blocks;
		rep.epsilon_zero_count += p.epsilon_zero;
		rep.palindromic_prefix_count += p.palindromic;
		rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
	}
	rep.elapsed = std::chrono::steady_clock::now() - t0;
	return rep;
}

} // namespace surdcf
