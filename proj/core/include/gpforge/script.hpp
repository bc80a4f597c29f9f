#pragma once

#include "gpforge/dsl.hpp"
#include "gpforge/slice.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace gpforge {

struct RunOptions {
	int degree = 0;   // 0: take the degree from each target
	int dweight = -1; // -1: max(1, weight of the target)
	std::uint64_t seed = 0;
	std::size_t cap = default_basis_cap;
	bool noncommutative = false; // ito queries: do not assume a commutative dot product
	std::string base_dir = ".";  // relative file names resolve here
};

/// Process exit codes.
enum ExitCode : int { exit_ok = 0, exit_query_failed = 1, exit_usage = 2 };

struct RunResult {
	int exit_code = exit_ok;
	std::string text; // human-readable report
	std::string json; // machine-readable report, deterministic for fixed inputs
};

/// Executes statements in order. A failing query sets exit code 1 and
/// execution continues; an error (bad construction, unknown axiom, ...)
/// is reported with its statement and stops the run.
RunResult run_script(const Script& script, const RunOptions& options = {});

/// Parses then runs; parse errors give exit code 2.
RunResult run_source(std::string_view text, const RunOptions& options = {});

} // namespace gpforge
