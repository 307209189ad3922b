/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

// Generators and the error-span contract for the text formats.

#pragma once

#include "surdcf/error.hpp"
#include "surdcf/notation.hpp"

#include <optional>
#include <random>
#include <string>

namespace surdcf::fuzz {

/// Digits <= 10^6, total length <= 50, b_0 possibly negative.
inline CFExpansion random_cf(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<long> c0(-1000000, 1000000), dig(1, 1000000), small(1, 9);
	std::uniform_int_distribution<std::size_t> len(0, 25);
	CFExpansion cf;
	cf.initial.push_back(rng() % 3 == 0 ? Integer(c0(rng)) : Integer(c0(rng) % 10));
	auto digit = [&] { return rng() % 2 ? Integer(dig(rng)) : Integer(small(rng)); };
	std::size_t m = len(rng);
	for (std::size_t i = 0; i < m; ++i)
		cf.initial.push_back(digit());
	std::size_t n = rng() % 5 == 0 ? 0 : 1 + len(rng) % 24;
	for (std::size_t i = 0; i < n; ++i)
		cf.repeating.push_back(digit());
	return cf;
}

inline QuadIrr random_quad(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<long> num(-5000, 5000), den(1, 3000), rad(1, 100000);
	for (;;) {
		Rational r(rad(rng), den(rng));
		if (is_rational_square(r))
			continue;
		Rational a = rng() % 4 == 0 ? Rational(0) : Rational(num(rng), den(rng));
		return make_quad_irr(a, rng() % 2 ? Sign::Plus : Sign::Minus, r);
	}
}

/// One to three random edits drawn from the formats' alphabet plus noise.
inline std::string mutate(std::mt19937_64 &rng, std::string s)
{
	static const std::string alphabet = "[];,()/+-0123456789 sqrtx\t.*";
	int edits = 1 + static_cast<int>(rng() % 3);
	for (int e = 0; e < edits; ++e) {
		std::size_t at = s.empty() ? 0 : rng() % (s.size() + 1);
		char c = alphabet[rng() % alphabet.size()];
		switch (rng() % 3) {
		case 0: s.insert(s.begin() + static_cast<std::ptrdiff_t>(at), c); break;
		case 1:
			if (at < s.size())
				s.erase(at, 1);
			break;
		default:
			if (at < s.size())
				s[at] = c;
			break;
		}
	}
	return s;
}

struct Outcome {
	bool ok;
	std::string why;
};

/// Span of a structured text error, if the attempt raised one; throws on anything unexpected.
template <typename F>
std::optional<SourceSpan> error_span(F &&attempt, bool &spanless_error)
{
	spanless_error = false;
	try {
		attempt();
		return std::nullopt;
	} catch (const ParseError &e) {
		return e.span();
	} catch (const InvalidDigit &e) {
		if (e.span())
			return *e.span();
		spanless_error = true;
		return std::nullopt;
	} catch (const DegenerateRadicand &) {
		spanless_error = true;
		return std::nullopt;
	} catch (const NonPositiveRadicand &) {
		spanless_error = true;
		return std::nullopt;
	}
}

/**
 * Every error span lies inside the input, and deleting the character at the
 * span start either parses or fails strictly later (in original offsets).
 */
template <typename Parse>
Outcome check_error_contract(const std::string &text, Parse &&parse)
{
	bool spanless = false;
	std::optional<SourceSpan> sp;
	try {
		sp = error_span([&] { parse(text); }, spanless);
	} catch (const std::exception &e) {
		return {false, std::string("unexpected exception: ") + e.what()};
	}
	if (!sp)
		return {true, {}};
	if (sp->start > sp->end || sp->end > text.size())
		return {false, "span out of range"};
	if (sp->start == text.size())
		return {true, {}};
	std::string shorter = text;
	shorter.erase(sp->start, 1);
	std::optional<SourceSpan> again;
	try {
		again = error_span([&] { parse(shorter); }, spanless);
	} catch (const std::exception &e) {
		return {false, std::string("unexpected exception on re-parse: ") + e.what()};
	}
	if (!again)
		return {true, {}};
	std::size_t mapped = again->start >= sp->start ? again->start + 1 : again->start;
	if (mapped <= sp->start)
		return {false, "re-parse failed earlier"};
	return {true, {}};
}

inline Outcome check_cf_error_contract(const std::string &text)
{
	return check_error_contract(text, [](const std::string &t) { parse_cf(t); });
}

inline Outcome check_quad_error_contract(const std::string &text)
{
	return check_error_contract(text, [](const std::string &t) { parse_quad(t); });
}

} // namespace surdcf::fuzz
