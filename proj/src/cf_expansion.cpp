/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/cf_expansion.hpp"

#include "surdcf/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace surdcf {

void validate(const CFExpansion &cf)
{
	if (cf.initial.empty())
		throw InvalidDigit("continued fraction has no integer part");
	check_digits(cf.initial);
	check_digits(cf.repeating, 0);
}

Digits digit_prefix(const CFExpansion &cf, std::size_t count)
{
	Digits out;
	out.reserve(count);
	for (std::size_t i = 0; i < count && i < cf.initial.size(); ++i)
		out.push_back(cf.initial[i]);
	if (cf.repeating.empty())
		return out;
	for (std::size_t j = 0; out.size() < count; ++j)
		out.push_back(cf.repeating[j % cf.repeating.size()]);
	return out;
}

Digits primitive_period(const Digits &block)
{
	const std::size_t n = block.size();
	for (std::size_t d = 1; d < n; ++d) {
		if (n % d != 0)
			continue;
		bool periodic = true;
		for (std::size_t i = d; i < n && periodic; ++i)
			periodic = block[i] == block[i - d];
		if (periodic)
			return Digits(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(d));
	}
	return block;
}

CFExpansion canonicalize(const CFExpansion &cf)
{
	if (cf.repeating.empty())
		throw std::invalid_argument("canonicalize: empty repeating block");
	CFExpansion out{cf.initial, primitive_period(cf.repeating)};
	while (out.initial.size() > 1 && out.initial.back() == out.repeating.back()) {
		out.initial.pop_back();
		std::rotate(out.repeating.rbegin(), out.repeating.rbegin() + 1, out.repeating.rend());
	}
	return out;
}

} // namespace surdcf
