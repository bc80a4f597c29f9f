#include "gpforge/script.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run_command(const std::string& file, const std::string& json_out, gpforge::RunOptions opts)
{
	std::string text;
	if (file == "-") {
		std::ostringstream ss;
		ss << std::cin.rdbuf();
		text = ss.str();
	} else {
		std::ifstream in(file, std::ios::binary);
		if (!in) {
			std::cerr << "gpforge: cannot open '" << file << "'\n";
			return gpforge::exit_usage;
		}
		std::ostringstream ss;
		ss << in.rdbuf();
		text = ss.str();
		opts.base_dir = std::filesystem::path(file).parent_path().string();
		if (opts.base_dir.empty())
			opts.base_dir = ".";
	}
	auto r = gpforge::run_source(text, opts);
	(r.exit_code == gpforge::exit_usage ? std::cerr : std::cout) << r.text;
	if (!json_out.empty()) {
		if (json_out == "-") {
			std::cout << r.json;
		} else {
			std::ofstream out(json_out, std::ios::binary);
			if (!out) {
				std::cerr << "gpforge: cannot write '" << json_out << "'\n";
				return gpforge::exit_usage;
			}
			out << r.json;
		}
	}
	return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact identities and models for differential nonassociative algebras"};
	app.require_subcommand(1);

	gpforge::RunOptions opts;
	std::string file, json_out;
	auto* run = app.add_subcommand("run", "Run a script ('-' reads stdin)");
	run->add_option("file", file, "Script file")->required();
	run->add_option("--json", json_out, "Write the JSON report here ('-' for stdout)");
	run->add_option("--degree", opts.degree, "Slice degree (0: from each target)")->check(CLI::NonNegativeNumber);
	run->add_option("--dweight", opts.dweight, "Derivation weight budget")->check(CLI::NonNegativeNumber);
	run->add_option("--seed", opts.seed, "Seed for random models");
	run->add_option("--cap", opts.cap, "Slice dimension cap")->check(CLI::PositiveNumber);
	run->add_flag("--noncommutative", opts.noncommutative, "Ito checks without a commutative dot product");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : gpforge::exit_usage;
	}
	try {
		return run_command(file, json_out, opts);
	} catch (const std::exception& e) {
		std::cerr << "gpforge: " << e.what() << "\n";
		return gpforge::exit_usage;
	}
}
