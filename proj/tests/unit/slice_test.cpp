#include "gpforge/error.hpp"
#include "gpforge/normalize.hpp"
#include "gpforge/slice.hpp"
#include "gpforge/variety.hpp"

#include <gtest/gtest.h>

using namespace gpforge;

namespace {

Integer binomial(unsigned long n, unsigned long k)
{
	Integer r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

// Multilinear shapes on n labelled leaves: each op splits the leaf set into
// two nonempty parts, ordered for a plain op and unordered otherwise.
Integer shape_count(int n, const OperationSignature& sig)
{
	std::vector<Rational> t(n + 1);
	t[1] = 1;
	for (int m = 2; m <= n; ++m)
		for (const auto& op : sig.ops()) {
			Rational factor = op.symmetry == Symmetry::none ? Rational(1) : Rational(1, 2);
			for (int k = 1; k < m; ++k)
				t[m] += factor * Rational(binomial(m, k)) * t[k] * t[m - k];
		}
	return t[n].get_num();
}

Integer slice_count(int n, int w_max, const OperationSignature& sig)
{
	Integer total;
	for (int w = 0; w <= (sig.has_derivation() ? w_max : 0); ++w)
		total += shape_count(n, sig) * binomial(w + n - 1, n - 1);
	return total;
}

} // namespace

TEST(Slice, FrozenSmallCounts)
{
	EXPECT_EQ(enumerate_basis(3, 0, sigs::commutative()).size(), 3u);
	EXPECT_EQ(enumerate_basis(4, 0, sigs::commutative()).size(), 15u);
	EXPECT_EQ(enumerate_basis(3, 0, sigs::dot_bracket()).size(), 12u);
	EXPECT_EQ(enumerate_basis(3, 0, sigs::star()).size(), 12u);
	EXPECT_EQ(enumerate_basis(3, 1, sigs::dot_bracket()).size(), 48u);
}

TEST(Slice, MatchesCountingOracle)
{
	for (const auto& sig : {sigs::commutative(), sigs::lie(), sigs::dot_bracket(), sigs::star(), sigs::zinbiel()})
		for (int n = 1; n <= 4; ++n)
			for (int w = 0; w <= 2; ++w)
				EXPECT_EQ(Integer(enumerate_basis(n, w, sig).size()), slice_count(n, w, sig))
				    << "n=" << n << " W=" << w << " ops=" << sig.ops().size();
}

TEST(Slice, TermsAreCanonicalMultilinearAndUnique)
{
	auto sig = sigs::dot_bracket();
	auto basis = enumerate_basis(4, 1, sig);
	std::set<Term> seen;
	for (const auto& t : basis.terms()) {
		EXPECT_TRUE(t.is_multilinear());
		EXPECT_EQ(t.degree(), 4);
		EXPECT_LE(t.weight(), 1);
		EXPECT_EQ(normalize(Poly(t), sig), Poly(t));
		EXPECT_TRUE(seen.insert(t).second);
	}
}

TEST(Slice, VectorRoundTrip)
{
	auto sig = sigs::dot_bracket();
	auto basis = enumerate_basis(3, 1, sig);
	Poly p = builtin("GeneralizedPoisson").find_axiom("gp")->poly;
	auto v = basis.to_vector(p);
	EXPECT_EQ(v.size(), basis.size());
	EXPECT_EQ(basis.from_vector(v), p);
	EXPECT_EQ(basis.to_sparse(p).size(), p.size());
}

TEST(Slice, OutsideMonomialThrows)
{
	auto sig = sigs::dot_bracket();
	auto basis = enumerate_basis(3, 0, sig);
	Poly p = apply_op(sig, "mul", var(1, 1), apply_op(sig, "mul", var(2), var(3)));
	EXPECT_THROW(basis.to_vector(p), Error);
}

TEST(Slice, CapIsEnforced)
{
	EXPECT_THROW(enumerate_basis(6, 2, sigs::star(), 1000), ResourceError);
}
