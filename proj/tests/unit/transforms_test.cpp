#include "generators.hpp"
#include "reference.hpp"

#include "gpforge/error.hpp"
#include "gpforge/model_families.hpp"
#include "gpforge/transforms.hpp"
#include "gpforge/variety.hpp"

#include <gtest/gtest.h>

using namespace gpforge;
using namespace gpforge::testing;

TEST(Polarize, StarSplitsIntoDotPlusBracket)
{
	EXPECT_EQ(polarize(star_formulas()("star(a, b)")), dot_bracket_formulas()("mul(a, b) + br(a, b)"));
	EXPECT_EQ(depolarize(dot_bracket_formulas()("mul(a, b)")), star_formulas()("dot(a, b)"));
	EXPECT_EQ(depolarize(dot_bracket_formulas()("br(a, b)")), star_formulas()("brk(a, b)"));
}

TEST(Polarize, WrongSignatureThrows)
{
	EXPECT_THROW(polarize(dot_bracket_formulas()("mul(a, b)")), SignatureError);
	EXPECT_THROW(depolarize(star_formulas()("star(a, b)")), SignatureError);
}

TEST(PolarizeProperty, MutuallyInverse)
{
	std::mt19937_64 rng(31);
	for (int i = 0; i < 150; ++i) {
		int leaves = 1 + static_cast<int>(rng() % 4);
		Poly s = random_poly(sigs::star(), leaves, 4, rng);
		EXPECT_EQ(depolarize(polarize(s)), s);
		Poly d = random_poly(sigs::dot_bracket(), leaves, 4, rng);
		EXPECT_EQ(polarize(depolarize(d)), d);
	}
}

TEST(PolarizeProperty, CommutesWithDerivation)
{
	std::mt19937_64 rng(32);
	for (int i = 0; i < 100; ++i) {
		Poly s = random_poly(sigs::star(), 3, 3, rng);
		EXPECT_EQ(polarize(d_apply(s, 1, sigs::star())), d_apply(polarize(s), 1, sigs::dot_bracket()));
	}
}

TEST(PolarizeVariety, NamesAndSignatures)
{
	Variety v = polarize(builtin("GPStar"), "polarized");
	EXPECT_EQ(v.name(), "polarized");
	EXPECT_EQ(v.signature(), polarized_signature());
	Variety back = depolarize(v, "back");
	EXPECT_EQ(back.axioms()[0].poly, builtin("GPStar").axioms()[0].poly);
}

TEST(ModelTransforms, DerivedBracketCertifiesBothCompatibilities)
{
	TableAlgebra m = derived_bracket(truncated_poly(4));
	const auto& c = m.certified();
	for (const char* name : {"CommAssoc", "GeneralizedPoisson", "TransposedPoisson"})
		EXPECT_NE(std::find(c.begin(), c.end(), name), c.end()) << name;
	// [x^i, x^j] = (i - j) x^(i+j) for the Euler derivation.
	EXPECT_EQ(m.product("br", 1, 2), scale(-1, basis_element(3)));
}

TEST(ModelTransforms, DerivedBracketNeedsCommutativeAssociativeInput)
{
	TableAlgebra m = derived_bracket(truncated_poly(3));
	EXPECT_THROW(derived_bracket(m), ModelError);
}

TEST(ModelTransforms, PolarizeDepolarizeRoundTrip)
{
	TableAlgebra m = derived_bracket(truncated_poly(4));
	TableAlgebra s = depolarize_model(m);
	EXPECT_TRUE(s.has_op("star"));
	TableAlgebra back = polarize_model(s);
	for (std::size_t i = 0; i < m.dim(); ++i)
		for (std::size_t k = 0; k < m.dim(); ++k) {
			EXPECT_EQ(back.product("mul", i, k), m.product("mul", i, k));
			EXPECT_EQ(back.product("br", i, k), m.product("br", i, k));
		}
	TableAlgebra star = s;
	EXPECT_TRUE(check_axioms(star, builtin("GPTPStar")).ok);
	EXPECT_TRUE(check_axioms(star, builtin("GPStar")).ok);
}

TEST(ModelTransforms, ZinbielConstructionsOnTheFreeAlgebra)
{
	FreeZinbiel fz(2, 3);
	TableAlgebra z = fz.with_derivation({fz.generator(1), fz.generator(0)});
	TableAlgebra s = zinbiel_star(z);
	const auto& cs = s.certified();
	EXPECT_NE(std::find(cs.begin(), cs.end(), "LeftSymmetric"), cs.end());
	TableAlgebra p = zinbiel_polarization(z);
	const auto& cp = p.certified();
	for (const char* name : {"CommAssoc", "GeneralizedPoisson", "TransposedPoisson"})
		EXPECT_NE(std::find(cp.begin(), cp.end(), name), cp.end()) << name;
}

TEST(ModelTransforms, ZinbielConstructionsRejectOtherInput)
{
	EXPECT_THROW(zinbiel_star(truncated_poly(3)), ModelError);
	EXPECT_THROW(zinbiel_polarization(integral_zinbiel(4)), ModelError);
}
