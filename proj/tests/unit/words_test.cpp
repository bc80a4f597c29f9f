#include "reference.hpp"

#include "gpforge/error.hpp"
#include "gpforge/model_families.hpp"
#include "gpforge/variety.hpp"

#include <gtest/gtest.h>

using namespace gpforge;
using namespace gpforge::testing;

namespace {

// Brute force: choose which positions of the result hold letters of u.
WordCombination shuffle_oracle(const Word& u, const Word& v)
{
	WordCombination out;
	std::size_t n = u.size() + v.size();
	for (unsigned mask = 0; mask < (1u << n); ++mask) {
		if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size())
			continue;
		Word w;
		std::size_t i = 0, j = 0;
		for (std::size_t p = 0; p < n; ++p)
			w.push_back(mask >> p & 1 ? u[i++] : v[j++]);
		out[w] += 1;
	}
	return out;
}

std::vector<Word> all_words(int letters, int max_len)
{
	std::vector<Word> out{{}};
	for (std::size_t k = 0; k < out.size(); ++k)
		if (static_cast<int>(out[k].size()) < max_len)
			for (int a = 0; a < letters; ++a) {
				Word w = out[k];
				w.push_back(a);
				out.push_back(w);
			}
	out.erase(out.begin());
	return out;
}

} // namespace

TEST(Shuffle, MatchesBruteForce)
{
	for (const auto& u : all_words(2, 3))
		for (const auto& v : all_words(2, 3))
			EXPECT_EQ(shuffle(u, v), shuffle_oracle(u, v));
}

TEST(HalfShuffle, LastLetterOfRightFactorStaysLast)
{
	for (const auto& u : all_words(2, 3))
		for (const auto& v : all_words(2, 3)) {
			Word head(v.begin(), v.end() - 1);
			WordCombination want;
			for (const auto& [w, c] : shuffle_oracle(u, head)) {
				Word full = w;
				full.push_back(v.back());
				want[full] += c;
			}
			EXPECT_EQ(half_shuffle(u, v), want);
		}
}

TEST(HalfShuffle, SingleLetterCoefficientsAreBinomial)
{
	// a^p < a^q = C(p+q-1, q-1) a^(p+q)
	for (int p = 1; p <= 4; ++p)
		for (int q = 1; q <= 4; ++q) {
			auto r = half_shuffle(Word(p, 0), Word(q, 0));
			ASSERT_EQ(r.size(), 1u);
			Integer want;
			mpz_bin_uiui(want.get_mpz_t(), p + q - 1, q - 1);
			EXPECT_EQ(r.begin()->second, want) << p << "," << q;
		}
}

TEST(FreeZinbiel, WordsOrderedByLengthThenLetters)
{
	FreeZinbiel fz(2, 3);
	EXPECT_EQ(fz.words().size(), 2u + 4u + 8u);
	EXPECT_EQ(fz.index_of({1}), 1u);
	EXPECT_EQ(fz.index_of({0, 0}), 2u);
	EXPECT_EQ(fz.word_name({0, 1, 1}), "xyy");
	EXPECT_THROW(fz.index_of({0, 0, 0, 0}), Error);
	EXPECT_THROW(FreeZinbiel(3, 12), ResourceError);
}

TEST(FreeZinbiel, ProductsPastTheCapVanish)
{
	FreeZinbiel fz(1, 3);
	TableAlgebra m = fz.algebra();
	EXPECT_TRUE(m.product("prod", fz.index_of({0, 0}), fz.index_of({0, 0})).empty());
	EXPECT_EQ(m.product("prod", 0, 0), scale(1, basis_element(fz.index_of({0, 0}))));
}

TEST(FreeZinbiel, ExtendedDerivationSatisfiesLeibniz)
{
	FreeZinbiel fz(2, 4);
	TableAlgebra m = fz.with_derivation({add(fz.generator(0), fz.generator(1)), scale(-1, fz.generator(0))});
	EXPECT_TRUE(leibniz_defects(m, "prod").empty());
	EXPECT_TRUE(m.certified().count("Zinbiel"));
}

TEST(FreeZinbiel, LengthRaisingDerivationIsTruncated)
{
	FreeZinbiel fz(1, 3);
	Element aa = basis_element(fz.index_of({0, 0}));
	EXPECT_NO_THROW(fz.extend_derivation({aa}));
	EXPECT_THROW(fz.extend_derivation({aa}, true), ModelError);
}

TEST(FreeZinbiel, ZinbielIdentityHoldsProperty)
{
	Variety zin = zinbiel_formulas().variety("zin", {{"zin", "zin(a, b, c)"}});
	for (int k = 1; k <= 3; ++k)
		for (int n = 1; n <= (k == 3 ? 3 : 4); ++n) {
			TableAlgebra m = FreeZinbiel(k, n).algebra();
			EXPECT_TRUE(check_axioms(m, zin).ok) << k << "," << n;
		}
}

TEST(IntegralModel, ProductIsXPowerOverExponent)
{
	// x^p * x^q = x^q * x^(p+1) / (p+1)
	TableAlgebra m = integral_zinbiel(6);
	EXPECT_EQ(m.product("prod", 1, 2), scale(Rational(1, 2), basis_element(4)));
	EXPECT_EQ(m.product("prod", 0, 0), basis_element(1));
	EXPECT_TRUE(m.product("prod", 3, 2).empty());
	EXPECT_TRUE(m.certified().empty());
}

TEST(IntegralModel, DefectsOnlyAtTheConstantOrTheBoundary)
{
	TableAlgebra m = integral_zinbiel(6);
	for (const auto& d : leibniz_defects(m, "prod"))
		EXPECT_TRUE(d.i == 0 || d.i + d.j + 1 >= 6) << d.i << "," << d.j;
	EXPECT_TRUE(integral_filtered_defects(m).empty());
}
