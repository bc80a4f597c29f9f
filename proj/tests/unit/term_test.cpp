#include "generators.hpp"

#include "gpforge/error.hpp"
#include "gpforge/normalize.hpp"
#include "gpforge/variety.hpp"

#include <gtest/gtest.h>

using namespace gpforge;
using gpforge::testing::random_poly;

namespace {

const OperationSignature db = sigs::dot_bracket();
const OperationSignature st = sigs::star();

Poly mul(const Poly& a, const Poly& b) { return apply_op(db, "mul", a, b); }
Poly br(const Poly& a, const Poly& b) { return apply_op(db, "br", a, b); }
Poly star(const Poly& a, const Poly& b) { return apply_op(st, "star", a, b); }
Poly D(const Poly& p, const OperationSignature& sig = db) { return d_apply(p, 1, sig); }

} // namespace

TEST(VarNames, CanonicalScheme)
{
	EXPECT_EQ(var_name(0), "_");
	EXPECT_EQ(var_name(1), "a");
	EXPECT_EQ(var_name(26), "z");
	EXPECT_EQ(var_name(27), "x27");
	EXPECT_EQ(canonical_var_index("c"), 3);
	EXPECT_EQ(canonical_var_index("x40"), 40);
	EXPECT_EQ(canonical_var_index("_"), 0);
	EXPECT_EQ(canonical_var_index("foo"), -1);
	for (int i = 0; i < 80; ++i)
		EXPECT_EQ(canonical_var_index(var_name(i)), i);
}

TEST(Normalize, CommutativeOperandsAreSorted)
{
	EXPECT_EQ(mul(var(2), var(1)), mul(var(1), var(2)));
	EXPECT_EQ(to_string(mul(var(3), mul(var(2), var(1)))), "mul(c,mul(a,b))");
}

TEST(Normalize, AnticommutativeSignAndSquare)
{
	EXPECT_EQ(br(var(2), var(1)), -br(var(1), var(2)));
	EXPECT_TRUE(br(var(1), var(1)).is_zero());
	EXPECT_TRUE(br(mul(var(1), var(2)), mul(var(2), var(1))).is_zero());
}

TEST(Normalize, PlainOperationKeepsOrder)
{
	EXPECT_NE(star(var(1), var(2)), star(var(2), var(1)));
}

TEST(Normalize, DerivationExpandsToLeaves)
{
	Poly p = D(mul(var(1), br(var(2), var(3))));
	EXPECT_EQ(p, mul(var(1, 1), br(var(2), var(3))) + mul(var(1), br(var(2, 1), var(3))) +
	                 mul(var(1), br(var(2), var(3, 1))));
	EXPECT_EQ(p.size(), 3u);
	EXPECT_EQ(p.weight(), 1);
	EXPECT_EQ(d_apply(var(1), 3, db), var(1, 3));
}

TEST(Normalize, RawTreeWithDerivationNode)
{
	Term raw = Term::apply("D", {Term::apply("star", {Term::var(1), Term::var(2)})});
	EXPECT_EQ(normalize(raw, st), star(var(1, 1), var(2)) + star(var(1), var(2, 1)));
}

TEST(Normalize, UnknownOperationThrows)
{
	EXPECT_THROW(apply_op(db, "star", var(1), var(2)), SignatureError);
	EXPECT_THROW(apply_op(db, "mul", var(1)), SignatureError);
}

TEST(Substitute, DerivationActsOnImage)
{
	Poly p = mul(var(1, 1), var(2));
	Poly q = substitute(p, {{1, br(var(1), var(3))}, {2, var(2)}}, db);
	EXPECT_EQ(q, mul(D(br(var(1), var(3))), var(2)));
	EXPECT_THROW(substitute(p, {{1, var(1)}}, db), Error);
}

TEST(Substitute, DropDerivationMonomials)
{
	Poly p = mul(var(1), var(2)) + mul(var(1, 1), var(2));
	EXPECT_EQ(drop_derivation_monomials(p), mul(var(1), var(2)));
}

TEST(NormalizeProperty, IdempotentOnCanonicalInput)
{
	std::mt19937_64 rng(11);
	for (const auto& sig : {db, st, sigs::zinbiel()})
		for (int i = 0; i < 200; ++i) {
			Poly p = random_poly(sig, 1 + static_cast<int>(rng() % 5), 4, rng);
			EXPECT_EQ(normalize(p, sig), p);
		}
}

TEST(NormalizeProperty, DerivationCommutesWithSubstitution)
{
	std::mt19937_64 rng(12);
	for (int i = 0; i < 150; ++i) {
		Poly p = random_poly(db, 3, 3, rng);
		std::map<int, Poly> sigma;
		for (int v = 1; v <= 3; ++v)
			sigma[v] = random_poly(db, 1 + static_cast<int>(rng() % 2), 4, rng, 2);
		EXPECT_EQ(D(substitute(p, sigma, db)), substitute(D(p), sigma, db));
	}
}

TEST(NormalizeProperty, DerivationIsLinearAndLeibniz)
{
	std::mt19937_64 rng(13);
	for (int i = 0; i < 150; ++i) {
		Poly a = random_poly(st, 2, 3, rng), b = random_poly(st, 2, 3, rng);
		EXPECT_EQ(D(a + b, st), D(a, st) + D(b, st));
		EXPECT_EQ(D(star(a, b), st), star(D(a, st), b) + star(a, D(b, st)));
	}
}

TEST(NormalizeProperty, AnticommutativityIsRespected)
{
	std::mt19937_64 rng(14);
	for (int i = 0; i < 150; ++i) {
		Poly a = random_poly(db, 2, 4, rng), b = random_poly(db, 2, 4, rng);
		EXPECT_EQ(br(a, b), -br(b, a));
		EXPECT_EQ(mul(a, b), mul(b, a));
	}
}
