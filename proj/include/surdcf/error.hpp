/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace surdcf {

/// Half-open byte range [start, end) into a parsed input text.
struct SourceSpan {
	std::size_t start = 0;
	std::size_t end = 0;

	friend bool operator==(const SourceSpan &, const SourceSpan &) = default;
};

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
	DivisionByZero() : Error("division by zero") {}
};

/// The radicand is the square of a rational: the value is rational.
class DegenerateRadicand : public Error {
public:
	using Error::Error;
};

class NonPositiveRadicand : public Error {
public:
	using Error::Error;
};

/// A continued-fraction digit beyond position 0 is < 1.
class InvalidDigit : public Error {
public:
	InvalidDigit(const std::string &msg, std::optional<SourceSpan> span = std::nullopt)
	: Error(msg), span_(span)
	{}

	const std::optional<SourceSpan> &span() const noexcept { return span_; }

private:
	std::optional<SourceSpan> span_;
};

/// The fixed-point equation of a Möbius map has a perfect-square discriminant.
class RationalFixedPoint : public Error {
public:
	using Error::Error;
};

class NoRootInWindow : public Error {
public:
	using Error::Error;
};

class TwoRootsInWindow : public Error {
public:
	using Error::Error;
};

/// No repeated surd state within the step budget of an expansion.
class PeriodTooLong : public Error {
public:
	using Error::Error;
};

class ParseError : public Error {
public:
	ParseError(const std::string &msg, SourceSpan span, std::vector<std::string> expected = {})
	: Error(msg), span_(span), expected_(std::move(expected))
	{}

	const SourceSpan &span() const noexcept { return span_; }
	const std::vector<std::string> &expected() const noexcept { return expected_; }

private:
	SourceSpan span_;
	std::vector<std::string> expected_;
};

} // namespace surdcf
