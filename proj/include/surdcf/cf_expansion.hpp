/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/convergents.hpp"

#include <cstddef>

namespace surdcf {

/**
 * Eventually periodic continued fraction [b_0; b_1, ..., b_m, (c_1, ..., c_n)].
 *
 * initial holds b_0 .. b_m and always contains b_0, which may be any
 * integer. Every later digit is >= 1. An empty repeating block denotes a
 * finite expansion, which evaluation rejects.
 */
struct CFExpansion {
	Digits initial;
	Digits repeating;

	friend bool operator==(const CFExpansion &, const CFExpansion &) = default;
};

/// Throws InvalidDigit if initial is empty or a digit past position 0 is < 1.
void validate(const CFExpansion &cf);

/// The first count digits of the expansion's digit stream.
Digits digit_prefix(const CFExpansion &cf, std::size_t count);

/// Shortest block whose repetition yields the given block.
Digits primitive_period(const Digits &block);

/**
 * Minimal period, then minimal preperiod: trailing initial digits equal to
 * the last repeating digit are absorbed into the period by rotation. b_0
 * always stays in the initial block.
 */
CFExpansion canonicalize(const CFExpansion &cf);

} // namespace surdcf
