// finpres: run verification suites and parse presentations.

#include "finpres/presentation.h"
#include "finpres/suites.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

const std::vector<std::string> kParameterFlags = {"r",         "k",      "grid",  "s",        "step1",
                                                  "m",         "n",      "length", "samples", "wreath_samples",
                                                  "group",     "structure", "property_samples", "range", "cocycle"};

int verify(const std::string &suite, const std::map<std::string, std::string> &flags, const std::string &json_path,
           std::uint64_t seed)
{
	finpres::SuiteReport report = finpres::run_suite(suite, flags, seed);
	if (json_path.empty())
		std::cout << report.dump();
	else
	{
		std::ofstream out(json_path, std::ios::binary);
		if (!out)
		{
			std::cerr << "cannot write " << json_path << '\n';
			return 2;
		}
		out << report.dump();
		std::cout << report.summary();
	}
	std::cerr << suite << ": " << report.elapsed_seconds << " s\n";
	return report.passed() ? 0 : 1;
}

int parse(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
	{
		std::cerr << "cannot read " << path << '\n';
		return 2;
	}
	std::stringstream buffer;
	buffer << in.rdbuf();
	std::string text = buffer.str();
	try
	{
		finpres::PresentationSpec spec = finpres::parse_presentation(text);
		std::cout << spec.str() << '\n';
		std::cout << "generators: " << spec.generators().size() << ", relations: " << spec.relations.size() << '\n';
		if (auto shape = finpres::recognize_baumslag_solitar(spec))
		{
			const auto &names = spec.generators();
			std::cout << "BS(" << shape->params.m() << "," << shape->params.n() << "), stable letter "
			          << names[static_cast<std::size_t>(shape->stable_letter)] << '\n';
			std::cout << "hopfian: " << (finpres::bs::hopfian_criterion(shape->params.m(), shape->params.n()) ? "yes" : "no")
			          << '\n';
		}
	}
	catch (const finpres::ParseError &e)
	{
		std::cerr << path << ": " << e.what() << '\n';
		std::size_t line_start = text.rfind('\n', e.position() == 0 ? 0 : e.position() - 1);
		line_start = line_start == std::string::npos ? 0 : line_start + 1;
		std::size_t line_end = text.find('\n', e.position());
		std::cerr << "  " << text.substr(line_start, line_end - line_start) << "\n  "
		          << std::string(e.position() - line_start, ' ') << "^\n";
		return 1;
	}
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Verification suites for finite-presentation witnesses"};
	app.require_subcommand(1);

	auto *verify_cmd = app.add_subcommand("verify", "run a verification suite");
	std::string suite;
	std::string json_path;
	std::uint64_t seed = 1;
	std::map<std::string, std::string> values;
	verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(finpres::suite_names()));
	verify_cmd->add_option("--json", json_path, "write the JSON report here instead of stdout");
	verify_cmd->add_option("--seed", seed, "seed for randomized checks");
	for (const auto &flag : kParameterFlags)
		verify_cmd->add_option("--" + flag, values[flag], "suite parameter");

	auto *parse_cmd = app.add_subcommand("parse", "parse a presentation file");
	std::string path;
	parse_cmd->add_option("file", path, "file containing <gens | relations>")->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		// --help and friends exit 0; usage errors share exit code 2
		return app.exit(e) == 0 ? 0 : 2;
	}

	try
	{
		if (*verify_cmd)
		{
			std::map<std::string, std::string> given;
			for (const auto &flag : kParameterFlags)
				if (verify_cmd->count("--" + flag) > 0)
					given[flag] = values[flag];
			return verify(suite, given, json_path, seed);
		}
		return parse(path);
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
}
