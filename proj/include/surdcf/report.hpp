/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#pragma once

#include "surdcf/enumerate.hpp"
#include "surdcf/expand.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace surdcf {

// Command reports shared by the CLI and the tests. Exact numbers are always
// "n/d" strings. Each builder throws the library's errors unchanged; the CLI
// maps them to exit codes.

nlohmann::json eval_report(std::string_view cf_text);
nlohmann::json expand_report(std::string_view quad_text, std::size_t max_steps = default_max_steps);
nlohmann::json epsilon_report(std::string_view cf_text);
nlohmann::json roundtrip_report(std::string_view cf_text, std::size_t digits = 200);
nlohmann::json enumeration_json(const EnumerationReport &rep);

/// Human-readable "key: value" lines for any of the reports above.
std::string render_text(const nlohmann::json &report);

/// "7x^2+19x-17=0"
std::string render_equation(const Integer &a2, const Integer &a1, const Integer &a0);

} // namespace surdcf
