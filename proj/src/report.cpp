/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The surdcf Authors
 */

#include "surdcf/report.hpp"

#include "surdcf/error.hpp"
#include "surdcf/evaluate.hpp"
#include "surdcf/notation.hpp"
#include "surdcf/theorems.hpp"

#include <sstream>
#include <stdexcept>

namespace surdcf {

using nlohmann::json;

namespace {

json digits_json(const Digits &ds)
{
	json arr = json::array();
	for (const auto &d : ds)
		arr.push_back(to_string(d));
	return arr;
}

json value_json(const QuadIrr &x)
{
	return {
		{"rational_part", x.rat().str()},
		{"radicand", x.radicand().str()},
		{"sign", std::to_string(to_int(x.sign()))},
		{"text", render_quad(x)},
	};
}

bool zero_initial(const CFExpansion &cf) { return cf.initial.size() == 1 && sgn(cf.initial[0]) == 0; }

std::string join(const json &arr, const char *sep)
{
	std::string out;
	for (std::size_t i = 0; i < arr.size(); ++i) {
		if (i > 0)
			out += sep;
		out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
	}
	return out;
}

std::string scalar(const json &v)
{
	if (v.is_string())
		return v.get<std::string>();
	if (v.is_null())
		return "n/a";
	return v.dump();
}

std::string term(const Integer &c, const char *var, bool first)
{
	if (sgn(c) == 0)
		return {};
	std::string out;
	Integer mag = abs(c);
	if (sgn(c) < 0)
		out += "-";
	else if (!first)
		out += "+";
	if (mag != 1 || *var == '\0')
		out += to_string(mag);
	return out + var;
}

} // namespace

std::string render_equation(const Integer &a2, const Integer &a1, const Integer &a0)
{
	std::string out = term(a2, "x^2", true);
	out += term(a1, "x", out.empty());
	out += term(a0, "", out.empty());
	if (out.empty())
		out = "0";
	return out + "=0";
}

json eval_report(std::string_view cf_text)
{
	CFExpansion cf = parse_cf(cf_text);
	if (cf.repeating.empty())
		throw std::invalid_argument("finite continued fractions are rational; a repeating block is required");
	validate(cf);
	QuadIrr x = evaluate_general(cf);

	json out = {
		{"command", "eval"},
		{"input", std::string(cf_text)},
		{"cf", render_cf(cf)},
		{"value", value_json(x)},
		{"two_a", (x.rat() * Rational(2)).str()},
		{"epsilon", nullptr},
		{"frac_two_a", nullptr},
		{"case", nullptr},
		{"equation", nullptr},
		{"theorem2", nullptr},
		{"congruence", nullptr},
		{"convergents", nullptr},
	};
	if (!zero_initial(cf))
		return out;

	TheoremReport rep = theorem1_report(cf.repeating);
	Theorem2Assertions t2 = theorem2_report(cf.repeating);
	QuadraticEquation eq = zero_periodic_equation(cf.repeating);
	Digits digits{0};
	digits.insert(digits.end(), cf.repeating.begin(), cf.repeating.end());
	ConvergentTable t = build_convergents(digits);
	json p = json::array(), q = json::array();
	for (std::ptrdiff_t k = -1; k < t.size(); ++k) {
		p.push_back(to_string(t.p(k)));
		q.push_back(to_string(t.q(k)));
	}

	out["two_a"] = rep.two_a.str();
	out["epsilon"] = rep.epsilon.str();
	out["frac_two_a"] = rep.frac_two_a.str();
	out["case"] = to_string(rep.case_flag);
	out["equation"] = {
		{"a2", to_string(eq.a2)},
		{"a1", to_string(eq.a1)},
		{"a0", to_string(eq.a0)},
		{"text", render_equation(eq.a2, eq.a1, eq.a0)},
	};
	out["theorem2"] = {
		{"int_two_a", t2.two_a_integral},
		{"neg_cn", t2.two_a_is_minus_cn},
		{"palindrome", t2.palindromic},
	};
	out["congruence"] = rep.congruence_holds;
	out["convergents"] = {{"p", p}, {"q", q}};
	return out;
}

json expand_report(std::string_view quad_text, std::size_t max_steps)
{
	QuadIrr x = parse_quad(quad_text);
	CFExpansion cf = expand(x, max_steps);
	return {
		{"command", "expand"},
		{"input", std::string(quad_text)},
		{"value", value_json(x)},
		{"cf", render_cf(cf)},
		{"initial", digits_json(cf.initial)},
		{"repeating", digits_json(cf.repeating)},
	};
}

json epsilon_report(std::string_view cf_text)
{
	CFExpansion cf = parse_cf(cf_text);
	if (!zero_initial(cf) || cf.repeating.empty())
		throw std::invalid_argument("epsilon needs the form [0; (c_1,...,c_n)]");
	TheoremReport rep = theorem1_report(cf.repeating);
	return {
		{"command", "epsilon"},
		{"input", std::string(cf_text)},
		{"block", digits_json(rep.block)},
		{"epsilon", rep.epsilon.str()},
		{"two_a", rep.two_a.str()},
		{"frac_two_a", rep.frac_two_a.str()},
		{"case", to_string(rep.case_flag)},
		{"palindromic", rep.palindromic},
		{"congruence", rep.congruence_holds},
		{"epsilon_zero", rep.epsilon_zero},
	};
}

json roundtrip_report(std::string_view cf_text, std::size_t digits)
{
	CFExpansion cf = parse_cf(cf_text);
	if (cf.repeating.empty())
		throw std::invalid_argument("finite continued fractions are rational; a repeating block is required");
	validate(cf);
	QuadIrr x = evaluate_general(cf);
	CFExpansion back = expand(x);
	CFExpansion canon = canonicalize(cf);
	bool same = digit_prefix(cf, digits) == digit_prefix(back, digits);
	return {
		{"command", "roundtrip"},
		{"input", std::string(cf_text)},
		{"value", value_json(x)},
		{"expansion", render_cf(back)},
		{"canonical_input", render_cf(canon)},
		{"canonical_changed", canon != cf},
		{"digits", digits},
		{"status", same ? "PASS" : "FAIL"},
	};
}

json enumeration_json(const EnumerationReport &rep)
{
	json violations = json::array();
	for (const auto &v : rep.violations)
		violations.push_back({{"block", digits_json(v.block)}, {"property", v.property}});
	json smoke = json::array();
	for (const auto &s : rep.smoke)
		smoke.push_back({{"input", s.input}, {"two_a", s.two_a}, {"epsilon", s.epsilon}, {"ok", s.ok}});
	return {
		{"command", "enumerate"},
		{"max_len", rep.max_len},
		{"max_digit", rep.max_digit},
		{"smoke", smoke},
		{"blocks_checked", rep.blocks_checked},
		{"violations", violations},
		{"epsilon_zero_count", rep.epsilon_zero_count},
		{"palindromic_prefix_count", rep.palindromic_prefix_count},
	};
}

std::string render_text(const json &r)
{
	std::ostringstream os;
	auto line = [&](const std::string &key, const std::string &val) { os << key << ": " << val << "\n"; };
	auto value = [&](const json &v) {
		line("value", v["text"].get<std::string>());
		line("rational_part", v["rational_part"].get<std::string>());
		line("radicand", v["radicand"].get<std::string>());
		line("sign", v["sign"].get<std::string>());
	};
	const std::string cmd = r["command"].get<std::string>();
	if (cmd != "enumerate")
		line("input", r["input"].get<std::string>());

	if (cmd == "eval") {
		line("cf", r["cf"].get<std::string>());
		value(r["value"]);
		for (const char *k : {"two_a", "epsilon", "frac_two_a", "case"})
			line(k, scalar(r[k]));
		line("equation", r["equation"].is_null() ? "n/a" : r["equation"]["text"].get<std::string>());
		if (r["theorem2"].is_null()) {
			line("theorem2", "n/a");
		} else {
			const json &t = r["theorem2"];
			line("theorem2", "int_two_a=" + t["int_two_a"].dump() + " neg_cn=" + t["neg_cn"].dump() +
						 " palindrome=" + t["palindrome"].dump());
		}
		line("congruence", scalar(r["congruence"]));
		if (!r["convergents"].is_null()) {
			line("p", join(r["convergents"]["p"], " "));
			line("q", join(r["convergents"]["q"], " "));
		}
	} else if (cmd == "expand") {
		value(r["value"]);
		line("cf", r["cf"].get<std::string>());
	} else if (cmd == "epsilon") {
		line("block", join(r["block"], ","));
		for (const char *k : {"epsilon", "two_a", "frac_two_a", "case", "palindromic", "congruence", "epsilon_zero"})
			line(k, scalar(r[k]));
	} else if (cmd == "roundtrip") {
		value(r["value"]);
		line("expansion", r["expansion"].get<std::string>());
		line("canonical_input", r["canonical_input"].get<std::string>());
		line("canonical_changed", scalar(r["canonical_changed"]));
		line("digits", scalar(r["digits"]));
		line("status", r["status"].get<std::string>());
	} else if (cmd == "enumerate") {
		for (const auto &s : r["smoke"])
			line("smoke " + s["input"].get<std::string>(),
			     "two_a=" + s["two_a"].get<std::string>() + " epsilon=" + s["epsilon"].get<std::string>() +
				     (s["ok"].get<bool>() ? " ok" : " FAILED"));
		for (const char *k : {"max_len", "max_digit", "blocks_checked", "epsilon_zero_count",
				      "palindromic_prefix_count"})
			line(k, scalar(r[k]));
		line("violations", std::to_string(r["violations"].size()));
		for (const auto &v : r["violations"])
			line("violation " + v["property"].get<std::string>(), "[0; (" + join(v["block"], ",") + ")]");
	} else {
		throw std::invalid_argument("unknown report command " + cmd);
	}
	return os.str();
}

} // namespace surdcf
