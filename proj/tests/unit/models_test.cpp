#include "reference.hpp"

#include "gpforge/error.hpp"
#include "gpforge/json_io.hpp"
#include "gpforge/model_families.hpp"
#include "gpforge/normalize.hpp"
#include "gpforge/transforms.hpp"
#include "gpforge/variety.hpp"

#include <gtest/gtest.h>

using namespace gpforge;
using namespace gpforge::testing;

namespace {

bool certified_as(const TableAlgebra& m, const std::string& name)
{
	return m.certified().count(name) > 0;
}

} // namespace

TEST(TruncatedPoly, EulerDerivationScalesByDegree)
{
	TableAlgebra m = truncated_poly(5);
	EXPECT_EQ(m.dim(), 5u);
	EXPECT_TRUE(certified_as(m, "CommAssoc"));
	EXPECT_EQ(m.product("mul", 1, 2), basis_element(3));
	EXPECT_TRUE(m.product("mul", 2, 3).empty());
	EXPECT_EQ(m.apply_derivation(basis_element(3)), scale(3, basis_element(3)));
}

TEST(TruncatedPoly, MonomialDerivation)
{
	// D = x^2 d/dx: D(x^k) = k x^(k+1), truncated at degree 5.
	TableAlgebra m = truncated_poly(6, TruncatedDerivation::monomial, 2);
	EXPECT_EQ(m.apply_derivation(basis_element(2)), scale(2, basis_element(3)));
	EXPECT_TRUE(m.apply_derivation(basis_element(5)).empty());
	EXPECT_TRUE(certified_as(m, "CommAssoc"));
}

TEST(TruncatedPoly, DerivationThatLowersDegreeIsRejected)
{
	EXPECT_THROW(truncated_poly(5, TruncatedDerivation::monomial, 0), ModelError);
}

TEST(CheckAxioms, WitnessOnFailure)
{
	TableAlgebra m = log_canonical_poisson(4);
	EXPECT_TRUE(certified_as(m, "Poisson"));
	auto r = check_axioms(m, builtin("TransposedPoisson"));
	ASSERT_FALSE(r.ok);
	EXPECT_EQ(r.failed, "tp");
	EXPECT_EQ(r.tuple.size(), 3u);
	EXPECT_FALSE(r.residual.empty());
	EXPECT_EQ(eval_identity(m, builtin("TransposedPoisson").find_axiom("tp")->poly, r.tuple), r.residual);
}

TEST(CheckAxioms, SymmetryFlagIsChecked)
{
	TableAlgebra m(2);
	m.add_op("mul", Symmetry::none);
	m.set_product("mul", 0, 1, basis_element(1));
	m.set_derivation("D", {Element{}, Element{}});
	auto r = check_axioms(m, builtin("CommAssoc"));
	EXPECT_FALSE(r.ok);
	EXPECT_EQ(r.failed, "symmetry:mul");
}

TEST(CheckAxioms, LeibnizIsChecked)
{
	TableAlgebra m = truncated_poly(3);
	m.set_derivation("D", {basis_element(0), Element{}, Element{}});
	auto r = check_axioms(m, builtin("CommAssoc"));
	EXPECT_FALSE(r.ok);
	EXPECT_EQ(r.failed, "leibniz:mul");
}

TEST(CheckAxioms, MissingOperationThrows)
{
	TableAlgebra m = truncated_poly(3);
	EXPECT_THROW(check_axioms(m, builtin("Lie")), ModelError);
}

TEST(LogCanonical, TransposedRuleFailsAtTheKnownTriple)
{
	// basis: x, y, x^2, xy, y^2, ... ; {x, y} = xy, and 2x.{x,y} - {x.x,y} - {x,x.y} = -x^2 y.
	TableAlgebra m = log_canonical_poisson(4);
	Poly tp = dot_bracket_formulas()("tp(a, b, c)");
	auto v = first_violation(m, tp);
	ASSERT_TRUE(v.has_value());
	EXPECT_FALSE(v->value.empty());
}

TEST(RandomModels, AlwaysCertifiedProperty)
{
	for (std::uint64_t seed = 0; seed < 40; ++seed) {
		TableAlgebra m = random_commassoc_der(1 + static_cast<int>(seed % 5), 0.4, seed);
		EXPECT_TRUE(certified_as(m, "CommAssoc")) << seed;
		TableAlgebra b = derived_bracket(m);
		EXPECT_TRUE(certified_as(b, "GeneralizedPoisson")) << seed;
		EXPECT_TRUE(certified_as(b, "TransposedPoisson")) << seed;
	}
	for (std::uint64_t seed = 0; seed < 20; ++seed) {
		TableAlgebra p = random_log_canonical(1 + static_cast<int>(seed % 4), seed);
		EXPECT_TRUE(certified_as(p, "Poisson")) << seed;
	}
}

TEST(RandomModels, SeedDeterminesModel)
{
	EXPECT_EQ(random_commassoc_der(4, 0.3, 9), random_commassoc_der(4, 0.3, 9));
	EXPECT_EQ(random_noncommutative_poisson(3, 5), random_noncommutative_poisson(3, 5));
}

TEST(ChangeBasis, PreservesCertifiedIdentities)
{
	TableAlgebra m = derived_bracket(truncated_poly(4));
	// f_0 = e_0 + e_1, f_1 = e_1, f_2 = 3 e_0 + e_2, f_3 = e_3
	std::vector<DenseVec> cols = {{1, 1, 0, 0}, {0, 1, 0, 0}, {3, 0, 1, 0}, {0, 0, 0, 1}};
	TableAlgebra n = change_basis(m, cols);
	EXPECT_TRUE(check_axioms(n, builtin("GP-and-TP")).ok);
	EXPECT_NE(n.product("mul", 0, 0), m.product("mul", 0, 0));
	std::vector<DenseVec> singular = {{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
	EXPECT_THROW(change_basis(m, singular), ModelError);
}

TEST(ModelJson, RoundTrip)
{
	TableAlgebra m = derived_bracket(random_commassoc_der(3, 0.5, 4));
	TableAlgebra back = model_from_json(model_to_json(m));
	EXPECT_EQ(back.dim(), m.dim());
	EXPECT_EQ(model_to_json(back), model_to_json(m));
	EXPECT_EQ(back.certified(), m.certified());
}

TEST(ModelJson, FalseClaimIsRejected)
{
	TableAlgebra tp_free = log_canonical_poisson(4);
	std::string bad = model_to_json(tp_free);
	bad.replace(bad.find("\"Poisson\""), 9, "\"TransposedPoisson\"");
	EXPECT_THROW(model_from_json(bad), ModelError);
}

TEST(ModelJson, UnknownClaimsAreDropped)
{
	TableAlgebra m = truncated_poly(2);
	std::string text = model_to_json(m);
	text.replace(text.find("\"CommAssoc\""), 11, "\"Custom\"");
	EXPECT_TRUE(model_from_json(text).certified().empty());
}

TEST(ModelJson, MalformedInput)
{
	EXPECT_THROW(model_from_json("{\"dim\": 2}"), ParseError);
	EXPECT_THROW(model_from_json("[1, 2"), ParseError);
	EXPECT_THROW(model_from_json(R"({"dim": 1, "ops": {"mul": {"symmetry": "plain", "table": [[["1/0"]]]}}})"),
	             ParseError);
}

TEST(Countermodel, PoissonButNotTransposed)
{
	Variety p = builtin("Poisson");
	Poly tp = builtin("TransposedPoisson").find_axiom("tp")->poly;
	auto cm = find_countermodel(p, tp, model_pool(p.signature(), 0));
	ASSERT_TRUE(cm.has_value());
	EXPECT_TRUE(check_axioms(cm->model, p).ok);
	EXPECT_EQ(eval_identity(cm->model, tp, cm->violation.tuple), cm->violation.value);
}

TEST(Countermodel, NoneForAConsequence)
{
	Variety v = builtin("GP-meet-TP");
	Poly int1 = builtin("GP-and-TP").find_axiom("int1")->poly;
	EXPECT_FALSE(find_countermodel(v, int1, model_pool(v.signature(), 3)).has_value());
}

TEST(Countermodel, ClaimedNamesAreNotTrusted)
{
	// A user variety reusing a built-in name with a different axiom.
	auto sig = sigs::commutative();
	Variety fake("CommAssoc", sig, {{"nil", apply_op(sig, "mul", var(1), var(2))}});
	std::vector<LabeledModel> pool = {{"poly", truncated_poly(3)}};
	EXPECT_FALSE(find_countermodel(fake, apply_op(sig, "mul", var(1), var(2)), pool).has_value());
}

TEST(CheckAxioms, InconsistentTableIsAModelError)
{
	TableAlgebra m(2);
	m.add_op("mul", Symmetry::symmetric);
	m.set_product("mul", 0, 1, basis_element(1));
	m.set_derivation("D", {Element{}, Element{}});
	EXPECT_THROW(check_axioms(m, builtin("CommAssoc")), ModelError);
}
