#pragma once

#include "gpforge/rational.hpp"
#include "gpforge/term.hpp"

#include <map>
#include <string>
#include <vector>

namespace gpforge {

struct Monomial {
	Rational coeff;
	Term term;
};

/**
 * Finite rational combination of normal-form terms, kept in canonical term
 * order with no zero coefficients. The empty combination is zero.
 *
 * Poly itself does not normalize terms; callers that build one from raw
 * terms go through normalize()/apply_op().
 */
class Poly {
public:
	using Map = std::map<Term, Rational>;
	using const_iterator = Map::const_iterator;

	Poly() = default;
	explicit Poly(Term t, Rational c = 1);

	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	const_iterator begin() const { return terms_.begin(); }
	const_iterator end() const { return terms_.end(); }

	Rational coeff(const Term& t) const;
	std::vector<Monomial> monomials() const;

	void add_term(const Term& t, const Rational& c);

	/// Largest variable index (0 for the zero polynomial).
	int max_var() const;
	/// Sorted distinct variable indices, hole excluded.
	std::vector<int> variables() const;
	/// Every monomial has the same leaves, each occurring once.
	bool is_multilinear() const;
	/// Maximum term weight; 0 for the zero polynomial.
	int weight() const;
	/// Common term degree; -1 when inhomogeneous or zero.
	int degree() const;
	bool contains_hole() const;

	Poly& operator+=(const Poly& o);
	Poly& operator-=(const Poly& o);
	Poly& operator*=(const Rational& c);

	friend Poly operator+(Poly a, const Poly& b) { return a += b; }
	friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
	friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
	friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
	friend Poly operator-(Poly p) { return p *= Rational(-1); }
	friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
	Map terms_;
};

/// "2*mul(a,b) - br(a,c)"; "0" for zero.
std::string to_string(const Poly& p, std::string_view derivation = "D");

} // namespace gpforge
