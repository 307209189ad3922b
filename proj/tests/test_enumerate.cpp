/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "support/oracles.hpp"
#include "surdcf/enumerate.hpp"
#include "surdcf/report.hpp"

#include <doctest.h>

using namespace surdcf;

TEST_CASE("enumerate (4, 6)")
{
	EnumerationReport r = run_enumeration(4, 6);
	CHECK(r.blocks_checked == 6 + 36 + 216 + 1296);
	CHECK(r.violations.empty());
	CHECK(r.epsilon_zero_count == r.palindromic_prefix_count);
	for (const auto &s : r.smoke)
		CHECK(s.ok);
}

TEST_CASE("enumerate (1, 3)")
{
	EnumerationReport r = run_enumeration(1, 3);
	CHECK(r.blocks_checked == 3);
	CHECK(r.epsilon_zero_count == 3);
	CHECK(r.palindromic_prefix_count == 3);
}

TEST_CASE("enumeration is independent of the worker count")
{
	auto one = enumeration_json(run_enumeration(4, 5, 1)).dump();
	CHECK(enumeration_json(run_enumeration(4, 5, 3)).dump() == one);
	CHECK(enumeration_json(run_enumeration(4, 5, 8)).dump() == one);
	CHECK(enumeration_json(run_enumeration(4, 5, 1)).dump() == one);
}

TEST_CASE("check_block finds nothing on valid blocks")
{
	for (const auto &b : oracle::all_blocks(3, 7))
		REQUIRE(check_block(b).empty());
	CHECK(check_block({16, 11, 1, 3, 2, 3, 1, 11, 16, 2}).empty());
	CHECK(check_block({1, 1, 1, 1}).empty());
}

TEST_CASE("invalid ranges are rejected")
{
	CHECK_THROWS_AS(run_enumeration(0, 3), std::invalid_argument);
	CHECK_THROWS_AS(run_enumeration(3, 0), std::invalid_argument);
}
