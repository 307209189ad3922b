/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/convergents.hpp"

#include "surdcf/error.hpp"

#include <stdexcept>
#include <string>

namespace surdcf {

void check_digits(std::span<const Digit> digits, std::size_t first_checked)
{
	for (std::size_t i = first_checked; i < digits.size(); ++i)
		if (digits[i] < 1)
			throw InvalidDigit("digit " + to_string(digits[i]) + " at position " + std::to_string(i) +
					   " is < 1");
}

ConvergentTable build_convergents(std::span<const Digit> digits)
{
	if (digits.empty())
		throw std::invalid_argument("build_convergents: empty digit list");
	check_digits(digits);

	ConvergentTable t;
	t.digits_.assign(digits.begin(), digits.end());
	t.p_.reserve(digits.size() + 1);
	t.q_.reserve(digits.size() + 1);
	t.p_.push_back(1);
	t.q_.push_back(0);
	t.p_.push_back(digits[0]);
	t.q_.push_back(1);
	for (std::size_t k = 1; k < digits.size(); ++k) {
		t.p_.push_back(digits[k] * t.p_[k] + t.p_[k - 1]);
		t.q_.push_back(digits[k] * t.q_[k] + t.q_[k - 1]);
	}
	return t;
}

} // namespace surdcf
