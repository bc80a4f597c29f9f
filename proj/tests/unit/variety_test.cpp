#include "reference.hpp"

#include "gpforge/dsl.hpp"
#include "gpforge/error.hpp"
#include "gpforge/normalize.hpp"
#include "gpforge/variety.hpp"

#include <gtest/gtest.h>

using namespace gpforge;
using namespace gpforge::testing;

namespace {

// Built-ins may fix either sign of an axiom.
bool same_up_to_sign(const Poly& a, const Poly& b)
{
	return a == b || a == -b;
}

} // namespace

TEST(Builtins, AxiomsMatchHandWrittenFormulas)
{
	const auto& P = dot_bracket_formulas();
	const auto& S = star_formulas();
	const auto& Z = zinbiel_formulas();
	struct Case {
		const char* variety;
		const char* axiom;
		const Formulas& f;
		const char* expr;
	};
	std::vector<Case> cases = {
	    {"Poisson", "assoc", P, "asad(a, b, c)"},
	    {"Poisson", "jacobi", P, "jac(a, b, c)"},
	    {"Poisson", "leibniz", P, "leib(a, b, c)"},
	    {"GeneralizedPoisson", "gp", P, "gen(a, b, c)"},
	    {"TransposedPoisson", "tp", P, "tp(a, b, c)"},
	    {"GP-and-TP", "int1", P, "int1(a, b, c)"},
	    {"GP-and-TP", "int2", P, "int2(a, b, c)"},
	    {"Poisson-and-TP", "dotbr", P, "dotbr(a, b, c)"},
	    {"Poisson-and-TP", "brdot", P, "brdot(a, b, c)"},
	    {"GPStar", "psi", S, "psi(a, b, c)"},
	    {"GPTPStar", "f", S, "f(a, b, c)"},
	    {"GPTPStar", "g", S, "g(a, b, c)"},
	    {"ReverseAssociative", "revassoc", S, "revassoc(a, b, c)"},
	    {"PTPStar", "companion", S, "companion(a, b, c)"},
	    {"LeftSymmetric", "lsym", S, "sassoc(a, b, c) - sassoc(b, a, c)"},
	    {"Zinbiel", "zin", Z, "zin(a, b, c)"},
	};
	for (const auto& c : cases) {
		Variety v = builtin(c.variety);
		const Axiom* ax = v.find_axiom(c.axiom);
		ASSERT_NE(ax, nullptr) << c.variety << "." << c.axiom;
		EXPECT_TRUE(same_up_to_sign(ax->poly, c.f(c.expr))) << c.variety << "." << c.axiom << ": " << to_string(ax->poly);
	}
}

TEST(Builtins, EveryNameResolvesAndRoundTripsThroughTheLanguage)
{
	for (const auto& name : builtin_names()) {
		Variety v = builtin(name);
		EXPECT_EQ(v.name(), name);
		std::string text = render_variety(v);
		Script s = parse_script(text);
		ASSERT_EQ(s.statements.size(), 1u) << text;
		const auto& decl = std::get<VarietyDecl>(s.statements[0].node);
		EXPECT_EQ(decl.name, name);
		OperationSignature sig(std::vector<Operation>{}, {});
		std::vector<Operation> ops;
		for (const auto& o : decl.ops)
			ops.push_back({o.name, o.arity, o.symmetry});
		sig = OperationSignature(ops, decl.derivations);
		EXPECT_EQ(sig, v.signature()) << name;
		ASSERT_EQ(decl.axioms.size(), v.axioms().size());
		for (std::size_t i = 0; i < decl.axioms.size(); ++i) {
			auto vars = VariableMap::scoped({&decl.axioms[i].lhs, &decl.axioms[i].rhs}, sig);
			Poly p = eval_expr(decl.axioms[i].lhs, sig, &vars) - eval_expr(decl.axioms[i].rhs, sig, &vars);
			EXPECT_EQ(p, v.axioms()[i].poly) << name << "." << v.axioms()[i].name;
		}
	}
	EXPECT_THROW(builtin("NoSuchVariety"), Error);
}

TEST(Multilinearize, SquareSplitsIntoSymmetricSum)
{
	auto sig = sigs::star();
	Poly sq = apply_op(sig, "star", var(1), var(1));
	auto parts = multilinearize(sq, sig);
	ASSERT_EQ(parts.size(), 1u);
	EXPECT_EQ(parts[0], apply_op(sig, "star", var(1), var(2)) + apply_op(sig, "star", var(2), var(1)));
}

TEST(Multilinearize, MultilinearInputIsUnchanged)
{
	Poly p = builtin("GeneralizedPoisson").find_axiom("gp")->poly;
	auto parts = multilinearize(p, sigs::dot_bracket());
	ASSERT_EQ(parts.size(), 1u);
	EXPECT_EQ(parts[0], p);
}

TEST(Multilinearize, InhomogeneousInputSplits)
{
	auto sig = sigs::commutative();
	Poly p = apply_op(sig, "mul", var(1), var(1)) + apply_op(sig, "mul", var(1), var(2));
	EXPECT_EQ(multilinearize(p, sig).size(), 2u);
}

TEST(Variety, NonMultilinearAxiomsAreSplit)
{
	auto sig = sigs::commutative();
	Variety v("sq", sig, {{"nil", apply_op(sig, "mul", var(1), var(1))}});
	ASSERT_EQ(v.axioms().size(), 1u);
	EXPECT_TRUE(v.axioms()[0].poly.is_multilinear());
}

TEST(Variety, DropDerivationTermsGivesPoissonLeibniz)
{
	Variety gp = builtin("GeneralizedPoisson");
	Variety p = drop_derivation_terms(gp, "dropped");
	EXPECT_EQ(p.find_axiom("gp")->poly, builtin("Poisson").find_axiom("leibniz")->poly);
}

TEST(Variety, CombineRequiresCommonSignature)
{
	EXPECT_THROW(combine("x", builtin("Lie"), builtin("CommAssoc")), SignatureError);
	Variety both = combine("both", builtin("GeneralizedPoisson"), builtin("TransposedPoisson"));
	EXPECT_NE(both.find_axiom("gp"), nullptr);
	EXPECT_NE(both.find_axiom("tp"), nullptr);
}
