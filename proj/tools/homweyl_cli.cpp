// Command-line front end: expression evaluation in A_1^k, star commutators
// and associators, derivation and morphism checks, truncated deformation
// checks, and the verification suites.

#include "homweyl/homweyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using homweyl::AlgebraCtx;
using homweyl::Scalar;
using homweyl::WeylPoly;

WeylPoly eval_text(const AlgebraCtx& ctx, const std::string& text)
{
	return homweyl::expr::eval(ctx, homweyl::expr::parse(text));
}

nlohmann::ordered_json poly_to_json(const WeylPoly& p)
{
	nlohmann::ordered_json terms = nlohmann::ordered_json::array();
	for (const auto& [m, c] : p.terms())
	{
		nlohmann::ordered_json term;
		term["y"] = m.y;
		term["x"] = m.x;
		term["coeff"] = homweyl::to_string(c);
		terms.push_back(term);
	}
	nlohmann::ordered_json out;
	out["terms"] = terms;
	return out;
}

void print_verdict(const homweyl::verify::Verdict& v)
{
	std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << v.suite_name << "\n";
	if (v.witness)
	{
		std::cout << "       witness:";
		for (const auto& [label, value] : v.witness->inputs)
			std::cout << " " << label << " = " << value << ";";
		std::cout << "\n";
		std::cout << "       expected: " << v.witness->expected << "\n";
		std::cout << "       actual:   " << v.witness->actual << "\n";
	}
	for (const auto& note : v.notes)
		std::cout << "       note: " << note << "\n";
}

nlohmann::ordered_json verdict_to_json(const homweyl::verify::Verdict& v)
{
	nlohmann::ordered_json j;
	j["suite"] = v.suite_name;
	j["passed"] = v.passed;
	if (v.witness)
	{
		nlohmann::ordered_json w;
		w["inputs"] = nlohmann::ordered_json::object();
		for (const auto& [label, value] : v.witness->inputs)
			w["inputs"][label] = value;
		w["expected"] = v.witness->expected;
		w["actual"] = v.witness->actual;
		j["witness"] = w;
	}
	else
		j["witness"] = nullptr;
	j["notes"] = v.notes;
	return j;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"homweyl: exact computations in the hom-associative Weyl algebras A_1^k"};
	app.require_subcommand(1);
	int exit_code = 0;

	// eval
	auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression in A_1^k and print its normal form");
	std::string eval_k = "0", eval_expr;
	bool eval_json = false;
	eval_cmd->add_option("--k", eval_k, "Deformation parameter k (rational, e.g. 1/2)")->capture_default_str();
	eval_cmd->add_option("expr", eval_expr, "Expression over x, y, rationals, '.', '*', '^', '*^'")->required();
	eval_cmd->add_flag("--json", eval_json, "Emit {\"terms\":[{\"y\":i,\"x\":j,\"coeff\":\"a/b\"}]}");
	eval_cmd->callback([&] {
		const AlgebraCtx ctx{homweyl::scalar_from_string(eval_k)};
		const WeylPoly p = eval_text(ctx, eval_expr);
		if (eval_json)
			std::cout << poly_to_json(p).dump() << "\n";
		else
			std::cout << homweyl::expr::format(p) << "\n";
	});

	// comm
	auto* comm_cmd = app.add_subcommand("comm", "Star commutator [e1, e2]_* in A_1^k");
	std::string comm_k = "0", comm_e1, comm_e2;
	comm_cmd->add_option("--k", comm_k, "Deformation parameter k")->capture_default_str();
	comm_cmd->add_option("expr1", comm_e1)->required();
	comm_cmd->add_option("expr2", comm_e2)->required();
	comm_cmd->callback([&] {
		const AlgebraCtx ctx{homweyl::scalar_from_string(comm_k)};
		std::cout << homweyl::expr::format(
		                 homweyl::star_commutator(ctx, eval_text(ctx, comm_e1), eval_text(ctx, comm_e2)))
		          << "\n";
	});

	// assoc
	auto* assoc_cmd = app.add_subcommand("assoc", "Star associator (e1, e2, e3)_* in A_1^k");
	std::string assoc_k = "0", assoc_e1, assoc_e2, assoc_e3;
	assoc_cmd->add_option("--k", assoc_k, "Deformation parameter k")->capture_default_str();
	assoc_cmd->add_option("expr1", assoc_e1)->required();
	assoc_cmd->add_option("expr2", assoc_e2)->required();
	assoc_cmd->add_option("expr3", assoc_e3)->required();
	assoc_cmd->callback([&] {
		const AlgebraCtx ctx{homweyl::scalar_from_string(assoc_k)};
		std::cout << homweyl::expr::format(homweyl::star_associator(ctx, eval_text(ctx, assoc_e1),
		                                                            eval_text(ctx, assoc_e2),
		                                                            eval_text(ctx, assoc_e3)))
		          << "\n";
	});

	// check-derivation
	auto* der_cmd = app.add_subcommand(
	    "check-derivation", "Probe the star-Leibniz law for delta = [cy + p(x), .] on A_1^k");
	std::string der_k = "0", der_c = "0", der_p = "0";
	unsigned der_bound = 4;
	der_cmd->add_option("--k", der_k, "Deformation parameter k")->capture_default_str();
	der_cmd->add_option("--c", der_c, "Coefficient of y in the generator")->capture_default_str();
	der_cmd->add_option("--p", der_p, "Polynomial in x added to the generator")->capture_default_str();
	der_cmd->add_option("--bound", der_bound, "Total-degree bound for basis-monomial pairs")
	    ->capture_default_str();
	der_cmd->callback([&] {
		const AlgebraCtx ctx{homweyl::scalar_from_string(der_k)};
		const WeylPoly p = eval_text(AlgebraCtx{}, der_p);
		if (!homweyl::is_x_only(p))
			throw std::invalid_argument("--p must be a polynomial in x only");
		const homweyl::DerivationSpec spec{ctx, homweyl::scalar_from_string(der_c), p};
		const auto verdict = homweyl::is_derivation(
		    ctx, [&spec](const WeylPoly& a) { return apply_derivation(spec, a); }, der_bound);
		if (verdict.passed)
			std::cout << "PASS\n";
		else
		{
			std::cout << "FAIL\n";
			std::cout << "witness: a = " << verdict.witness->first << ", b = " << verdict.witness->second
			          << "\n";
			std::cout << "  delta(a*b)             = " << verdict.lhs << "\n";
			std::cout << "  delta(a)*b + a*delta(b) = " << verdict.rhs << "\n";
			exit_code = 1;
		}
	});

	// check-morphism
	auto* mor_cmd =
	    app.add_subcommand("check-morphism", "Check a generator-image candidate morphism A_1^k -> A_1^l");
	std::string mor_k = "0", mor_l = "0", mor_fx, mor_fy;
	unsigned mor_bound = 4;
	mor_cmd->add_option("--k", mor_k, "Source parameter k")->capture_default_str();
	mor_cmd->add_option("--l", mor_l, "Target parameter l")->capture_default_str();
	mor_cmd->add_option("--fx", mor_fx, "Image of x (expression, evaluated in the target)")->required();
	mor_cmd->add_option("--fy", mor_fy, "Image of y (expression, evaluated in the target)")->required();
	mor_cmd->add_option("--bound", mor_bound, "Total-degree bound for the multiplicativity audit")
	    ->capture_default_str();
	mor_cmd->callback([&] {
		const Scalar l = homweyl::scalar_from_string(mor_l);
		const AlgebraCtx target{l};
		const homweyl::GenMorphism m{homweyl::scalar_from_string(mor_k), l, eval_text(target, mor_fx),
		                             eval_text(target, mor_fy)};
		const auto verdict = homweyl::check_morphism(m, mor_bound);
		if (verdict.passed)
			std::cout << "PASS\n";
		else
		{
			std::cout << "FAIL clause " << homweyl::clause_label(*verdict.violated) << ": "
			          << homweyl::clause_description(*verdict.violated) << "\n";
			if (verdict.witness)
				std::cout << "witness: a = " << verdict.witness->first << ", b = " << verdict.witness->second
				          << "\n";
			std::cout << "  lhs = " << verdict.lhs << "\n";
			std::cout << "  rhs = " << verdict.rhs << "\n";
			exit_code = 1;
		}
	});

	// deform-check
	auto* def_cmd = app.add_subcommand(
	    "deform-check", "Check the deformed identity coefficientwise through a truncation order");
	unsigned def_order = 10;
	std::string def_triple;
	bool def_jacobi = false;
	def_cmd->add_option("--order", def_order, "Truncation order N")->capture_default_str();
	def_cmd->add_option("--triple", def_triple, "Three ';'-separated expressions, evaluated in A_1")
	    ->required();
	def_cmd->add_flag("--jacobi", def_jacobi, "Check the hom-Jacobi identity instead of hom-associativity");
	def_cmd->callback([&] {
		std::vector<std::string> parts;
		std::size_t begin = 0;
		for (;;)
		{
			const std::size_t semi = def_triple.find(';', begin);
			if (semi == std::string::npos)
			{
				parts.push_back(def_triple.substr(begin));
				break;
			}
			parts.push_back(def_triple.substr(begin, semi - begin));
			begin = semi + 1;
		}
		if (parts.size() != 3)
			throw std::invalid_argument("--triple must contain exactly three ';'-separated expressions");
		// the triple entries are elements of A_1, embedded as constant series
		const AlgebraCtx a1{};
		using homweyl::TruncatedSeries;
		const auto a = TruncatedSeries::constant(def_order, eval_text(a1, parts[0]));
		const auto b = TruncatedSeries::constant(def_order, eval_text(a1, parts[1]));
		const auto c = TruncatedSeries::constant(def_order, eval_text(a1, parts[2]));
		TruncatedSeries lhs(def_order), rhs(def_order);
		if (def_jacobi)
		{
			lhs = bracket_t(alpha_t(a), bracket_t(b, c)) + bracket_t(alpha_t(c), bracket_t(a, b)) +
			      bracket_t(alpha_t(b), bracket_t(c, a));
			rhs = TruncatedSeries(def_order); // zero
		}
		else
		{
			lhs = star_t(alpha_t(a), star_t(b, c));
			rhs = star_t(star_t(a, b), alpha_t(c));
		}
		bool all_ok = true;
		for (unsigned i = 0; i <= def_order; ++i)
		{
			const bool ok = lhs.coeff(i) == rhs.coeff(i);
			std::cout << "t^" << i << ": " << (ok ? "PASS" : "FAIL") << "\n";
			if (!ok)
			{
				std::cout << "  lhs coefficient: " << lhs.coeff(i) << "\n";
				std::cout << "  rhs coefficient: " << rhs.coeff(i) << "\n";
				all_ok = false;
			}
		}
		std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
		if (!all_ok)
			exit_code = 1;
	});

	// verify
	auto* ver_cmd = app.add_subcommand("verify", "Run the verification suites");
	std::vector<std::string> ver_suites;
	std::uint64_t ver_seed = 0;
	unsigned ver_bound = 4, ver_trials = 200;
	bool ver_json = false;
	ver_cmd->add_option("--suite", ver_suites,
	                    "Suites to run (default all): commuter, center, power-assoc, alternativity, "
	                    "derivations, morphisms, eq45");
	ver_cmd->add_option("--seed", ver_seed, "RNG seed")->capture_default_str();
	ver_cmd->add_option("--bound", ver_bound, "Degree bound")->capture_default_str();
	ver_cmd->add_option("--trials", ver_trials, "Randomized trials per suite")->capture_default_str();
	ver_cmd->add_flag("--json", ver_json, "Emit the suite report as JSON");
	ver_cmd->callback([&] {
		homweyl::verify::SuiteConfig cfg;
		cfg.rng_seed = ver_seed;
		cfg.degree_bound = ver_bound;
		cfg.trials = ver_trials;
		const auto& registry = homweyl::verify::all_suites();
		std::vector<std::pair<std::string, homweyl::verify::SuiteFn>> selected;
		if (ver_suites.empty())
			selected = registry;
		else
			for (const auto& name : ver_suites)
			{
				bool found = false;
				for (const auto& entry : registry)
					if (entry.first == name)
					{
						selected.push_back(entry);
						found = true;
						break;
					}
				if (!found)
					throw std::invalid_argument("unknown suite '" + name + "'");
			}
		nlohmann::ordered_json report = nlohmann::ordered_json::array();
		bool all_ok = true;
		for (const auto& [name, fn] : selected)
		{
			const auto verdict = fn(cfg);
			all_ok = all_ok && verdict.passed;
			if (ver_json)
				report.push_back(verdict_to_json(verdict));
			else
				print_verdict(verdict);
		}
		if (ver_json)
			std::cout << report.dump() << "\n";
		else
			std::cout << (all_ok ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
		if (!all_ok)
			exit_code = 1;
	});

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		return app.exit(e);
	}
	catch (const homweyl::expr::ParseError& e)
	{
		std::cerr << e.what() << "\n";
		return 2;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return exit_code;
}
