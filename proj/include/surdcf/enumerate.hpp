/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/convergents.hpp"

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace surdcf {

struct Violation {
	Digits block;
	/// "P1" .. "P11", or "SMOKE" for a failed headline example
	std::string property;

	friend bool operator==(const Violation &, const Violation &) = default;
};

struct SmokeResult {
	std::string input;
	std::string two_a;
	std::string epsilon;
	bool ok;
};

struct EnumerationReport {
	unsigned max_len = 0;
	unsigned max_digit = 0;
	std::size_t blocks_checked = 0;
	std::vector<Violation> violations;
	std::size_t epsilon_zero_count = 0;
	std::size_t palindromic_prefix_count = 0;
	std::vector<SmokeResult> smoke;
	std::chrono::nanoseconds elapsed{0};
};

/**
 * Checks P1..P11 on every block [0; (c_1..c_n)] with 1 <= n <= max_len and
 * 1 <= c_i <= max_digit, ordered by length then lexicographically.
 *
 * Blocks sharing a prefix c_1..c_{n-1} are checked together so that the
 * independence of epsilon from c_n (P2) compares within the group. Work is
 * split into contiguous prefix ranges across workers and merged in order;
 * the report (apart from elapsed) does not depend on the worker count.
 */
EnumerationReport run_enumeration(unsigned max_len, unsigned max_digit, unsigned workers = 1);

/// The two headline examples, evaluated before a sweep.
std::vector<SmokeResult> smoke_examples();

/// Property violations of one block, P2 excluded (it needs the whole prefix group).
std::vector<std::string> check_block(const Digits &block);

} // namespace surdcf
