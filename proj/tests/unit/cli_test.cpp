#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path scripts = GPFORGE_TEST_SCRIPTS;

int run(const std::string& args)
{
	std::string cmd = std::string(GPFORGE_CLI) + " " + args + " > /dev/null 2>&1";
	int status = std::system(cmd.c_str());
	return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
	std::ifstream in(p);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

fs::path temp(const std::string& name)
{
	return fs::temp_directory_path() / ("gpforge_cli_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Cli, ExitCodes)
{
	EXPECT_EQ(run("run " + (scripts / "equivalence.gpf").string()), 0);
	EXPECT_EQ(run("run " + (scripts / "empty.gpf").string()), 0);
	EXPECT_EQ(run("run " + (scripts / "poisson_not_transposed.gpf").string()), 1);
	EXPECT_EQ(run("run " + (scripts / "syntax_error.gpf").string()), 2);
	EXPECT_EQ(run("run /nonexistent/script.gpf"), 2);
	EXPECT_EQ(run("frobnicate"), 2);
	EXPECT_EQ(run("run " + (scripts / "empty.gpf").string() + " --degree -3"), 2);
}

TEST(Cli, ReadsStdin)
{
	EXPECT_EQ(run("run - < " + (scripts / "equivalence.gpf").string()), 0);
}

TEST(Cli, JsonReportIsWrittenAndStable)
{
	auto a = temp("a.json"), b = temp("b.json");
	std::string script = (scripts / "poisson_not_transposed.gpf").string();
	EXPECT_EQ(run("run " + script + " --seed 3 --json " + a.string()), 1);
	EXPECT_EQ(run("run " + script + " --seed 3 --json " + b.string()), 1);
	std::string ja = slurp(a);
	EXPECT_FALSE(ja.empty());
	EXPECT_EQ(ja, slurp(b));
	EXPECT_NE(ja.find("\"countermodel\""), std::string::npos);
	fs::remove(a);
	fs::remove(b);
}

TEST(Cli, EquivalenceReportHoldsCertificates)
{
	auto out = temp("eq.json");
	EXPECT_EQ(run("run " + (scripts / "equivalence.gpf").string() + " --json " + out.string()), 0);
	std::string j = slurp(out);
	std::size_t count = 0;
	for (auto pos = j.find("\"certificate\""); pos != std::string::npos; pos = j.find("\"certificate\"", pos + 1))
		++count;
	EXPECT_EQ(count, 8u);
	fs::remove(out);
}
