/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

// surdcf: exact evaluation and expansion of periodic continued fractions.
//
// Exit codes: 0 success, 1 usage or unsupported input, 2 parse error or
// non-quadratic input, 3 invalid digit, 4 period overflow, 5 property
// violation / roundtrip failure.

#include "surdcf/error.hpp"
#include "surdcf/notation.hpp"
#include "surdcf/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

namespace {

enum Exit : int { Ok = 0, Usage = 1, Parse = 2, Digit = 3, Overflow = 4, Violation = 5 };

int emit(const nlohmann::json &report, bool as_json, const std::string &out_path)
{
	std::string text = as_json ? report.dump(2) + "\n" : surdcf::render_text(report);
	if (out_path.empty()) {
		std::cout << text;
		return Ok;
	}
	std::ofstream f(out_path);
	if (!f) {
		std::cerr << "error: cannot open " << out_path << " for writing\n";
		return Usage;
	}
	f << text;
	return Ok;
}

template <typename F>
int guarded(const std::string &input, F &&body)
{
	try {
		return body();
	} catch (const surdcf::ParseError &e) {
		std::cerr << "parse error: " << e.what() << "\n" << surdcf::caret_diagnostic(input, e.span()) << "\n";
		return Parse;
	} catch (const surdcf::InvalidDigit &e) {
		std::cerr << "invalid digit: " << e.what() << "\n";
		if (e.span())
			std::cerr << surdcf::caret_diagnostic(input, *e.span()) << "\n";
		return Digit;
	} catch (const surdcf::PeriodTooLong &e) {
		std::cerr << "error: " << e.what() << "\n";
		return Overflow;
	} catch (const surdcf::DegenerateRadicand &e) {
		std::cerr << "error: not a quadratic irrational: " << e.what() << "\n";
		return Parse;
	} catch (const surdcf::NonPositiveRadicand &e) {
		std::cerr << "error: not a quadratic irrational: " << e.what() << "\n";
		return Parse;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return Usage;
	}
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact arithmetic for periodic continued fractions and quadratic irrationals"};
	app.require_subcommand(1);

	std::string input;
	std::string out_path;
	bool as_json = false;
	std::size_t steps = surdcf::default_max_steps;
	std::size_t digits = 200;
	unsigned max_len = 0, max_digit = 0, workers = 1;

	auto common = [&](CLI::App *sub) {
		sub->add_flag("--json", as_json, "Emit JSON");
		sub->add_option("--out", out_path, "Write the report to FILE instead of standard output");
	};

	auto *eval = app.add_subcommand("eval", "Evaluate a periodic continued fraction exactly");
	eval->add_option("cf", input, "Continued fraction, e.g. \"[0; (1,2,2,3)]\"")->required();
	common(eval);

	auto *exp = app.add_subcommand("expand", "Expand a quadratic irrational into a periodic continued fraction");
	exp->add_option("quad", input, "Quadratic irrational, e.g. \"sqrt(39/44)\"")->required();
	exp->add_option("--steps", steps, "Maximum expansion steps")->check(CLI::PositiveNumber);
	common(exp);

	auto *eps = app.add_subcommand("epsilon", "Report 2a = -c_n + epsilon for [0; (c_1,...,c_n)]");
	eps->add_option("cf", input, "Continued fraction of the form [0; (...)]")->required();
	common(eps);

	auto *en = app.add_subcommand("enumerate", "Exhaustively check all blocks up to a size");
	en->add_option("--max-len", max_len, "Maximum block length")->required()->check(CLI::PositiveNumber);
	en->add_option("--max-digit", max_digit, "Maximum digit")->required()->check(CLI::PositiveNumber);
	en->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
	common(en);

	auto *rt = app.add_subcommand("roundtrip", "Evaluate, re-expand and compare digit streams");
	rt->add_option("cf", input, "Continued fraction")->required();
	rt->add_option("--digits", digits, "Number of digits to compare")->check(CLI::PositiveNumber);
	common(rt);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return Usage;
	}

	if (*eval)
		return guarded(input, [&] { return emit(surdcf::eval_report(input), as_json, out_path); });
	if (*exp)
		return guarded(input, [&] { return emit(surdcf::expand_report(input, steps), as_json, out_path); });
	if (*eps)
		return guarded(input, [&] { return emit(surdcf::epsilon_report(input), as_json, out_path); });
	if (*rt)
		return guarded(input, [&] {
			auto r = surdcf::roundtrip_report(input, digits);
			int rc = emit(r, as_json, out_path);
			return rc != Ok ? rc : r["status"] == "PASS" ? Ok : Violation;
		});
	return guarded(input, [&] {
		auto rep = surdcf::run_enumeration(max_len, max_digit, workers);
		std::cerr << "elapsed: "
			  << std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count() << " ms\n";
		int rc = emit(surdcf::enumeration_json(rep), as_json, out_path);
		return rc != Ok ? rc : rep.violations.empty() ? Ok : Violation;
	});
}
