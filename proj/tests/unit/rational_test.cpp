#include "gpforge/error.hpp"
#include "gpforge/rational.hpp"

#include <gtest/gtest.h>

using namespace gpforge;

TEST(Rational, PqStringAlwaysHasDenominator)
{
	EXPECT_EQ(to_pq_string(Rational(3)), "3/1");
	EXPECT_EQ(to_pq_string(Rational(0)), "0/1");
	EXPECT_EQ(to_pq_string(Rational(-1, 2)), "-1/2");
}

TEST(Rational, DisplayDropsUnitDenominator)
{
	EXPECT_EQ(to_display_string(Rational(4)), "4");
	EXPECT_EQ(to_display_string(Rational(-3, 4)), "-3/4");
}

TEST(Rational, ParseCanonicalizes)
{
	EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
	EXPECT_EQ(parse_rational("-2"), Rational(-2));
	EXPECT_EQ(parse_rational("+5/10"), Rational(1, 2));
	EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
	          Rational(mpz_class("41152263004115226300411522630")));
}

TEST(Rational, ParseRejectsGarbage)
{
	EXPECT_THROW(parse_rational(""), ParseError);
	EXPECT_THROW(parse_rational("1/0"), ParseError);
	EXPECT_THROW(parse_rational("1.5"), ParseError);
	EXPECT_THROW(parse_rational("3/"), ParseError);
	EXPECT_THROW(parse_rational("a"), ParseError);
}

TEST(Rational, PqRoundTripProperty)
{
	for (long p = -40; p <= 40; p += 3)
		for (long q = 1; q <= 17; q += 2) {
			Rational r(p, q);
			r.canonicalize();
			EXPECT_EQ(parse_rational(to_pq_string(r)), r);
			EXPECT_EQ(parse_rational(to_display_string(r)), r);
		}
}
