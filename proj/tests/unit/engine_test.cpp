#include "generators.hpp"
#include "reference.hpp"

#include "gpforge/engine.hpp"
#include "gpforge/error.hpp"
#include "gpforge/json_io.hpp"
#include "gpforge/variety.hpp"

#include <gtest/gtest.h>

using namespace gpforge;
using namespace gpforge::testing;

TEST(Instances, LabelsReadAsScriptParts)
{
	InstanceSpec spec;
	spec.axiom = "assoc";
	spec.images = {Term::var(1), Term::var(2, 1), Term::var(3)};
	EXPECT_EQ(instance_label(spec), "assoc(a,D(b),c)");
	spec.context = Term::apply("mul", {Term::hole(), Term::var(4)});
	spec.dshift = 1;
	EXPECT_EQ(instance_label(spec), "assoc(a,D(b),c) in mul(_,d) dshift 1");
}

TEST(Instances, AllLieInTheSlice)
{
	Variety v = builtin("GeneralizedPoisson");
	auto basis = enumerate_basis(4, 1, v.signature());
	auto list = instances(v, 4, 1);
	EXPECT_GT(list.size(), 100u);
	for (const auto& inst : list) {
		EXPECT_EQ(instance_poly(v, inst.spec), inst.poly);
		EXPECT_NO_THROW(basis.to_vector(inst.poly)) << inst.label;
	}
}

TEST(Instances, PermutationsOnlyGivesSixPerTernaryAxiom)
{
	auto list = instances(builtin("Lie"), 3, 0, InstanceOptions::permutations_only());
	EXPECT_EQ(list.size(), 6u);
}

TEST(Verify, PartPolyChecksInputs)
{
	Variety v = builtin("Lie");
	CertificatePart p = part(1, "nope", {"a", "b", "c"});
	EXPECT_THROW(part_poly(p, v), Error);
	p = part(1, "jacobi", {"a", "b"});
	EXPECT_THROW(part_poly(p, v), Error);
	// jacobi is alternating, so a repeated variable there just gives zero
	p = part(1, "jacobi", {"a", "a", "b"});
	EXPECT_TRUE(part_poly(p, v).is_zero());
	p = part(1, "leibniz", {"a", "a", "b"});
	EXPECT_THROW(part_poly(p, builtin("Poisson")), Error);
}

TEST(Verify, ResidualIsPartsMinusTarget)
{
	Variety v = builtin("Lie");
	Certificate c;
	c.target = v.axioms()[0].poly;
	c.parts = {part(2, "jacobi", {"a", "b", "c"})};
	auto r = verify_certificate(c, v);
	EXPECT_FALSE(r.ok);
	EXPECT_EQ(r.residual, v.axioms()[0].poly);
}

TEST(Derive, CertificateVerifiesAndNotInSliceReports)
{
	Variety p = builtin("Poisson");
	Poly tp = builtin("TransposedPoisson").find_axiom("tp")->poly;
	auto r = derive(tp, p, 3, 1);
	ASSERT_TRUE(std::holds_alternative<NotInSlice>(r));
	const auto& n = std::get<NotInSlice>(r);
	EXPECT_EQ(n.degree, 3);
	EXPECT_EQ(n.max_weight, 1);
	EXPECT_GT(n.slice_dimension, n.rank);

	Poly gp_dropped = builtin("Poisson").find_axiom("leibniz")->poly;
	auto ok = derive(gp_dropped, p, 3, 0);
	ASSERT_TRUE(std::holds_alternative<Certificate>(ok));
	EXPECT_TRUE(verify_certificate(std::get<Certificate>(ok), p).ok);
}

TEST(Derive, DegreeFourConsequenceNeedsContexts)
{
	// x * assoc(a,b,c) is only reachable through a one-hole context.
	auto sig = sigs::commutative();
	Variety v = builtin("CommAssoc");
	Poly target = apply_op(sig, "mul", v.axioms()[0].poly, var(4));
	EXPECT_TRUE(std::holds_alternative<Certificate>(derive(target, v, 4, 0)));
	InstanceOptions flat;
	flat.contexts = false;
	EXPECT_TRUE(std::holds_alternative<NotInSlice>(derive(target, v, 4, 0, flat)));
}

TEST(DeriveProperty, RandomCombinationsOfInstancesAreRecovered)
{
	Variety v = builtin("GeneralizedPoisson");
	auto list = instances(v, 3, 1);
	std::mt19937_64 rng(21);
	for (int trial = 0; trial < 25; ++trial) {
		Poly target;
		for (int k = 0; k < 4; ++k)
			target += Rational(static_cast<long>(rng() % 9) - 4) * list[rng() % list.size()].poly;
		auto r = derive(target, v, 3, 1);
		ASSERT_TRUE(std::holds_alternative<Certificate>(r)) << to_string(target);
		EXPECT_TRUE(verify_certificate(std::get<Certificate>(r), v).ok);
	}
}

TEST(DeriveProperty, SingleBracketMonomialsAreRejected)
{
	// The degree-3 Lie ideal is spanned by the three-term Jacobi sum.
	Variety v = builtin("Lie");
	std::mt19937_64 rng(22);
	auto basis = enumerate_basis(3, 0, v.signature());
	int rejected = 0;
	for (int trial = 0; trial < 20; ++trial) {
		Poly t = Poly(basis.terms()[rng() % basis.size()]);
		auto r = derive(t, v, 3, 0);
		rejected += std::holds_alternative<NotInSlice>(r);
	}
	EXPECT_EQ(rejected, 20);
}

TEST(Implication, ReportsPerAxiom)
{
	auto fwd = check_implication(builtin("GP-meet-TP"), builtin("GP-and-TP"), 3, 1);
	EXPECT_TRUE(fwd.all_derived());
	EXPECT_EQ(fwd.entries.size(), 4u);
	auto bad = check_implication(builtin("Poisson"), builtin("TransposedPoisson"), 3, 1);
	EXPECT_FALSE(bad.all_derived());
	EXPECT_TRUE(bad.entries[0].derived());
	EXPECT_FALSE(bad.entries[2].derived());
}

TEST(CertificateJson, RoundTripIsExact)
{
	Variety v = builtin("GP-and-TP");
	Poly target = builtin("GP-meet-TP").find_axiom("tp")->poly;
	auto r = derive(target, v, 3, 1);
	ASSERT_TRUE(std::holds_alternative<Certificate>(r));
	const auto& c = std::get<Certificate>(r);
	std::string text = certificate_to_json(c);
	Certificate back = certificate_from_json(text, v.signature());
	EXPECT_EQ(back.target, c.target);
	ASSERT_EQ(back.parts.size(), c.parts.size());
	EXPECT_TRUE(verify_certificate(back, v).ok);
	EXPECT_EQ(certificate_to_json(back), text);
}

TEST(CertificateJson, MalformedInputIsAParseError)
{
	auto sig = sigs::dot_bracket();
	EXPECT_THROW(certificate_from_json("{", sig), ParseError);
	EXPECT_THROW(certificate_from_json(R"({"target": 3})", sig), ParseError);
	EXPECT_THROW(certificate_from_json(R"({"target": [["1/1", "mul(a,"]], "parts": []})", sig), ParseError);
}
