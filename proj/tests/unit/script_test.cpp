#include "gpforge/json_io.hpp"
#include "gpforge/model_families.hpp"
#include "gpforge/script.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace gpforge;
using nlohmann::json;

namespace {

json report(const RunResult& r)
{
	return json::parse(r.json);
}

} // namespace

TEST(Run, EmptyScriptSucceedsWithEmptyReport)
{
	auto r = run_source("");
	EXPECT_EQ(r.exit_code, exit_ok);
	EXPECT_TRUE(report(r)["ok"].get<bool>());
	EXPECT_TRUE(report(r)["queries"].empty());
}

TEST(Run, EquivalenceInBothDirections)
{
	auto r = run_source(R"(
variety GT = builtin "GP-meet-TP";
variety Inter = builtin "GP-and-TP";
query equivalent GT Inter degree 3 dweight 1;
)");
	EXPECT_EQ(r.exit_code, exit_ok) << r.text;
	auto j = report(r)["queries"][0];
	EXPECT_EQ(j["kind"], "equivalent");
	for (const char* dir : {"forward", "backward"})
		for (const auto& e : j[dir])
			EXPECT_TRUE(e.contains("certificate")) << dir << " " << e["axiom"];
}

TEST(Run, FailedImplicationCarriesCountermodel)
{
	auto r = run_source("query derive \"Poisson\" => \"TransposedPoisson\";");
	EXPECT_EQ(r.exit_code, exit_query_failed);
	auto entries = report(r)["queries"][0]["forward"];
	const auto& tp = entries[2];
	EXPECT_EQ(tp["axiom"], "tp");
	EXPECT_TRUE(tp.contains("not_in_slice"));
	EXPECT_FALSE(tp["countermodel"].is_null());
	EXPECT_TRUE(tp["countermodel"].contains("table"));
}

TEST(Run, VerifyWithPartsAndContexts)
{
	auto r = run_source(R"(
variety C = builtin "CommAssoc";
query verify C {
  target : mul(mul(mul(x, y), z), w) - mul(mul(x, mul(y, z)), w);
  part assoc(x, y, z) in mul(_, w);
}
query verify C {
  target : mul(mul(x, y), z);
  part assoc(x, y, z);
}
)");
	EXPECT_EQ(r.exit_code, exit_query_failed);
	auto q = report(r)["queries"];
	EXPECT_TRUE(q[0]["ok"].get<bool>());
	EXPECT_FALSE(q[1]["ok"].get<bool>());
	EXPECT_FALSE(q[1]["residual"].empty());
}

TEST(Run, ErrorStopsAndNamesTheStatement)
{
	auto r = run_source(R"(
variety C = builtin "CommAssoc";
query verify C { target : mul(a, b); part nosuch(a, b); }
query derive C : mul(a, b);
)");
	EXPECT_EQ(r.exit_code, exit_query_failed);
	auto q = report(r)["queries"];
	ASSERT_EQ(q.size(), 1u);
	EXPECT_EQ(q[0]["line"], 3);
	EXPECT_NE(q[0]["error"].get<std::string>().find("nosuch"), std::string::npos);
	EXPECT_NE(q[0]["statement"].get<std::string>().find("verify"), std::string::npos);
}

TEST(Run, ParseErrorIsUsageExit)
{
	auto r = run_source("variety V { op mul : 2 plain; axiom x : mul(a,) = a; }");
	EXPECT_EQ(r.exit_code, exit_usage);
	EXPECT_NE(r.text.find("1:46"), std::string::npos);
}

TEST(Run, ModelsAndTransforms)
{
	auto r = run_source(R"(
variety Z = builtin "Zinbiel";
model f = freezinbiel(k=2, n=3, der=shift);
model s = zinbiel_star(f);
model p = zinbiel_polarization(f);
model t = truncpoly(4);
model b = derived_bracket(t);
model st = depolarize(b);
query model-check f Z;
query model-check s "LeftSymmetric";
query model-check p "GP-and-TP";
query model-check st "GPTPStar";
query model-check t "Lie";
)");
	auto q = report(r)["queries"];
	ASSERT_EQ(q.size(), 5u) << r.text;
	for (int i = 0; i < 4; ++i)
		EXPECT_TRUE(q[i]["ok"].get<bool>()) << r.text;
	EXPECT_TRUE(q[4].contains("error")) << r.text;
}

TEST(Run, ModelCheckFailureHasWitness)
{
	auto r = run_source("model l = logcanonical(4);\nquery model-check l \"TransposedPoisson\";");
	EXPECT_EQ(r.exit_code, exit_query_failed);
	auto c = report(r)["queries"][0]["check"];
	EXPECT_EQ(c["failed"], "tp");
	EXPECT_EQ(c["tuple"].size(), 3u);
}

TEST(Run, PolarizeQueriesUseScriptNames)
{
	auto r = run_source("query polarize star(p, q);\nquery depolarize br(p, q);");
	EXPECT_EQ(r.exit_code, exit_ok);
	auto q = report(r)["queries"];
	EXPECT_EQ(q[0]["result"], "br(p,q) + mul(p,q)");
	EXPECT_EQ(q[1]["result"], "1/2*star(p,q) - 1/2*star(q,p)");
}

TEST(Run, CertificateFilesAndModelFilesLoad)
{
	auto dir = std::filesystem::temp_directory_path() / "gpforge_script_test";
	std::filesystem::create_directories(dir);
	{
		std::ofstream(dir / "m.json") << model_to_json(log_canonical_poisson(3));
	}
	auto first = run_source("query derive \"GP-and-TP\" : br(mul(a, b), c) - mul(mul(b, c), D(a)) - "
	                        "mul(mul(a, c), D(b)) + mul(mul(a, b), D(c));");
	ASSERT_EQ(first.exit_code, exit_ok) << first.text;
	auto cert = report(first)["queries"][0]["certificate"];
	{
		std::ofstream(dir / "c.json") << cert.dump(2);
	}
	RunOptions opts;
	opts.base_dir = dir.string();
	auto r = run_source(R"(
model m = load("m.json");
query model-check m "Poisson";
query cert "GP-and-TP" "c.json";
)",
	                    opts);
	EXPECT_EQ(r.exit_code, exit_ok) << r.text;
	std::filesystem::remove_all(dir);
}

TEST(Run, CountermodelQuery)
{
	auto r = run_source("query countermodel \"Poisson\" : mul(a, br(b, c));");
	EXPECT_EQ(r.exit_code, exit_ok) << r.text;
	EXPECT_FALSE(report(r)["queries"][0]["countermodel"].is_null());
	auto none = run_source("query countermodel \"GeneralizedPoisson\" : mul(a, b) - mul(b, a);");
	EXPECT_EQ(none.exit_code, exit_query_failed);
}

TEST(Run, ItoQueries)
{
	auto r = run_source("model z = zero(dim=3);\nquery ito z;\nquery ito pool 8;");
	EXPECT_EQ(r.exit_code, exit_ok) << r.text;
	auto q = report(r)["queries"];
	EXPECT_GT(q[0]["decompositions"].get<int>(), 0);
	EXPECT_EQ(q[1]["models"], 8);
}

TEST(Run, FlagsThreadThrough)
{
	const char* text = "query derive \"Poisson\" : br(mul(a, b), c) - mul(a, br(b, c)) - mul(br(a, c), b);";
	RunOptions o;
	o.dweight = 0;
	auto r = run_source(text, o);
	EXPECT_EQ(report(r)["queries"][0]["dweight"], 0);
	RunOptions tiny;
	tiny.cap = 3;
	auto capped = run_source("query derive \"Poisson\" => \"TransposedPoisson\";", tiny);
	EXPECT_NE(capped.json.find("error"), std::string::npos) << capped.json;
}

TEST(Run, DeterministicReports)
{
	const char* text = R"(
model r = random(dim=3);
model b = derived_bracket(r);
query ito b;
query derive "Poisson" => "TransposedPoisson";
)";
	RunOptions o;
	o.seed = 99;
	auto a = run_source(text, o);
	auto b = run_source(text, o);
	EXPECT_EQ(a.json, b.json);
	EXPECT_EQ(a.text, b.text);
}
