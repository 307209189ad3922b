/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/notation.hpp"

#include "surdcf/error.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <vector>

namespace surdcf {

namespace {

enum class Tok { LBrack, RBrack, Semi, Comma, LParen, RParen, Slash, Plus, Minus, Int, Sqrt, End };

const char *describe(Tok t)
{
	switch (t) {
	case Tok::LBrack: return "'['";
	case Tok::RBrack: return "']'";
	case Tok::Semi: return "';'";
	case Tok::Comma: return "','";
	case Tok::LParen: return "'('";
	case Tok::RParen: return "')'";
	case Tok::Slash: return "'/'";
	case Tok::Plus: return "'+'";
	case Tok::Minus: return "'-'";
	case Tok::Int: return "integer";
	case Tok::Sqrt: return "'sqrt'";
	case Tok::End: return "end of input";
	}
	return "?";
}

struct Token {
	Tok kind;
	SourceSpan span;
	std::string_view text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// Next token at or after i; i is advanced past it.
Token next_token(std::string_view s, std::size_t &i)
{
	while (i < s.size() && is_space(s[i]))
		++i;
	std::size_t start = i;
	if (i == s.size())
		return {Tok::End, {start, start}, {}};
	auto single = [&](Tok k) {
		++i;
		return Token{k, {start, start + 1}, s.substr(start, 1)};
	};
	char c = s[i];
	switch (c) {
	case '[': return single(Tok::LBrack);
	case ']': return single(Tok::RBrack);
	case ';': return single(Tok::Semi);
	case ',': return single(Tok::Comma);
	case '(': return single(Tok::LParen);
	case ')': return single(Tok::RParen);
	case '/': return single(Tok::Slash);
	case '+': return single(Tok::Plus);
	default: break;
	}
	if (c == '-')
		return single(Tok::Minus);
	if (is_digit(c)) {
		while (i < s.size() && is_digit(s[i]))
			++i;
		return {Tok::Int, {start, i}, s.substr(start, i - start)};
	}
	if (s.substr(i, 4) == "sqrt") {
		i += 4;
		return {Tok::Sqrt, {start, i}, s.substr(start, 4)};
	}
	throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
}

class Parser {
public:
	explicit Parser(std::string_view text) : text_(text) {}

	// Tokens are lexed on demand so errors surface in left-to-right order.
	const Token &peek() const
	{
		if (!cur_) {
			std::size_t at = pos_;
			cur_ = next_token(text_, at);
			pos_ = at;
		}
		return *cur_;
	}
	bool at(Tok k) const { return peek().kind == k; }

	Token take()
	{
		Token t = peek();
		cur_.reset();
		return t;
	}

	[[noreturn]] void fail(std::vector<Tok> expected) const
	{
		std::vector<std::string> names;
		std::string msg = "expected ";
		for (std::size_t i = 0; i < expected.size(); ++i) {
			names.emplace_back(describe(expected[i]));
			if (i > 0)
				msg += i + 1 == expected.size() ? " or " : ", ";
			msg += names.back();
		}
		msg += std::string(", found ") + describe(peek().kind);
		throw ParseError(msg, peek().span, std::move(names));
	}

	Token expect(Tok k)
	{
		if (!at(k))
			fail({k});
		return take();
	}

	/// Optionally signed integer; the span covers the sign.
	std::pair<Integer, SourceSpan> signed_int()
	{
		std::optional<std::size_t> minus;
		if (at(Tok::Minus))
			minus = take().span.start;
		else if (!at(Tok::Int))
			fail({Tok::Int, Tok::Minus});
		Token t = expect(Tok::Int);
		Integer v(std::string(t.text), 10);
		if (minus)
			v = -v;
		return {v, {minus.value_or(t.span.start), t.span.end}};
	}

	Integer expect_int() { return signed_int().first; }

	Integer expect_digit()
	{
		if (at(Tok::Minus))
			throw InvalidDigit("digits after position 0 must be positive", peek().span);
		auto [v, span] = signed_int();
		if (v < 1)
			throw InvalidDigit("digit " + to_string(v) + " is < 1", span);
		return v;
	}

	Integer expect_positive()
	{
		if (at(Tok::Minus))
			throw ParseError("denominator must be a positive integer", peek().span, {"positive integer"});
		auto [v, span] = signed_int();
		if (sgn(v) <= 0)
			throw ParseError("denominator must be a positive integer", span, {"positive integer"});
		return v;
	}

	Rational rational()
	{
		Integer n = expect_int();
		if (!at(Tok::Slash))
			return Rational(n);
		take();
		return Rational(n, expect_positive());
	}

private:
	std::string_view text_;
	mutable std::size_t pos_ = 0;
	mutable std::optional<Token> cur_;
};

/// Smallest m > 0 with w | m^2, if trial division can settle it.
std::optional<Integer> square_hull_root(const Integer &w)
{
	constexpr unsigned long trial_limit = 200000;
	Integer rem = w;
	Integer m = 1;
	for (unsigned long p = 2; Integer(p) * p * p <= rem; ++p) {
		if (p > trial_limit)
			return std::nullopt;
		unsigned e = 0;
		while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
			rem /= p;
			++e;
		}
		for (unsigned k = 0; k < (e + 1) / 2; ++k)
			m *= p;
	}
	// rem is 1, a prime, a product of two distinct primes, or a prime square
	IsqrtResult s = isqrt(rem);
	m *= s.exact ? s.root : rem;
	return m;
}

} // namespace

CFExpansion parse_cf(std::string_view text)
{
	Parser ps(text);
	CFExpansion cf;
	ps.expect(Tok::LBrack);
	cf.initial.push_back(ps.expect_int());
	if (ps.at(Tok::Semi) || ps.at(Tok::Comma)) {
		ps.take();
		for (;;) {
			if (ps.at(Tok::LParen)) {
				ps.take();
				cf.repeating.push_back(ps.expect_digit());
				while (ps.at(Tok::Comma)) {
					ps.take();
					cf.repeating.push_back(ps.expect_digit());
				}
				ps.expect(Tok::RParen);
				break;
			}
			if (!ps.at(Tok::Int) && !ps.at(Tok::Minus))
				ps.fail({Tok::Int, Tok::LParen});
			cf.initial.push_back(ps.expect_digit());
			if (!ps.at(Tok::Comma))
				break;
			ps.take();
		}
	}
	if (!ps.at(Tok::RBrack))
		ps.fail(cf.repeating.empty() ? std::vector<Tok>{Tok::Comma, Tok::RBrack} : std::vector<Tok>{Tok::RBrack});
	ps.take();
	ps.expect(Tok::End);
	return cf;
}

QuadIrr parse_quad(std::string_view text)
{
	Parser ps(text);
	if (ps.at(Tok::LParen)) {
		ps.take();
		Integer p = ps.expect_int();
		if (!ps.at(Tok::Plus) && !ps.at(Tok::Minus))
			ps.fail({Tok::Plus, Tok::Minus});
		Sign s = ps.take().kind == Tok::Plus ? Sign::Plus : Sign::Minus;
		ps.expect(Tok::Sqrt);
		ps.expect(Tok::LParen);
		Integer d = ps.expect_int();
		ps.expect(Tok::RParen);
		ps.expect(Tok::RParen);
		ps.expect(Tok::Slash);
		Integer q = ps.expect_positive();
		ps.expect(Tok::End);
		return make_quad_irr(Rational(p, q), s, Rational(d, q * q));
	}

	Rational a;
	Sign s = Sign::Plus;
	bool negated = false;
	bool plus = false;
	if (ps.at(Tok::Plus)) {
		ps.take();
		plus = true;
	} else if (ps.at(Tok::Minus)) {
		ps.take();
		negated = true;
		s = Sign::Minus;
	} else if (!ps.at(Tok::Int) && !ps.at(Tok::Sqrt)) {
		ps.fail({Tok::Int, Tok::Minus, Tok::Sqrt, Tok::LParen});
	}
	if (!plus && ps.at(Tok::Int)) {
		// the leading sign belonged to the rational part
		a = ps.rational();
		if (negated)
			a = -a;
		if (!ps.at(Tok::Plus) && !ps.at(Tok::Minus))
			ps.fail({Tok::Plus, Tok::Minus});
		s = ps.take().kind == Tok::Plus ? Sign::Plus : Sign::Minus;
	}
	ps.expect(Tok::Sqrt);
	ps.expect(Tok::LParen);
	Rational r = ps.rational();
	ps.expect(Tok::RParen);
	ps.expect(Tok::End);
	return make_quad_irr(a, s, r);
}

std::string render_cf(const CFExpansion &cf)
{
	std::string out = "[";
	if (!cf.initial.empty())
		out += to_string(cf.initial.front());
	if (cf.initial.size() > 1 || !cf.repeating.empty()) {
		out += "; ";
		for (std::size_t i = 1; i < cf.initial.size(); ++i) {
			if (i > 1)
				out += ", ";
			out += to_string(cf.initial[i]);
		}
		if (!cf.repeating.empty()) {
			if (cf.initial.size() > 1)
				out += ", ";
			out += "(";
			for (std::size_t i = 0; i < cf.repeating.size(); ++i) {
				if (i > 0)
					out += ",";
				out += to_string(cf.repeating[i]);
			}
			out += ")";
		}
	}
	return out + "]";
}

std::string render_quad(const QuadIrr &x)
{
	const Integer d = x.rat().den();
	const Integer w = x.radicand().den();
	if (x.rat().sign() == 0 || (d == 1 && w == 1))
		return x.str();
	std::optional<Integer> m = square_hull_root(w);
	if (!m)
		return x.str();
	Integer q;
	mpz_lcm(q.get_mpz_t(), d.get_mpz_t(), m->get_mpz_t());
	Integer p = x.rat().num() * (q / d);
	Integer dd = x.radicand().num() * (q * q / w);
	return "(" + to_string(p) + (x.sign() == Sign::Plus ? " + " : " - ") + "sqrt(" + to_string(dd) + "))/" +
	       to_string(q);
}

std::string caret_diagnostic(std::string_view text, const SourceSpan &span)
{
	std::string out(text);
	out += "\n";
	out.append(span.start, ' ');
	out.append(std::max<std::size_t>(1, span.end - span.start), '^');
	return out;
}

} // namespace surdcf
