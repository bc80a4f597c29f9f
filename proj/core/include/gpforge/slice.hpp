#pragma once

#include "gpforge/poly.hpp"
#include "gpforge/signature.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpforge {

inline constexpr std::size_t default_basis_cap = 100000;

/**
 * Enumerates normal-form multilinear terms on a set of variables with a
 * fixed total derivation weight. Results are memoized per (variable set,
 * weight) and returned in canonical order.
 *
 * The hole (variable 0) may be part of the set; it never receives a
 * derivation.
 */
class TermEnumerator {
public:
	TermEnumerator(OperationSignature sig, std::size_t cap = default_basis_cap);

	/// `vars` is a bitmask over variable indices 0..63.
	const std::vector<Term>& terms(std::uint64_t vars, int weight);

	const OperationSignature& signature() const { return sig_; }

private:
	OperationSignature sig_;
	std::size_t cap_;
	std::map<std::pair<std::uint64_t, int>, std::vector<Term>> memo_;
};

/// Coordinate system of the multilinear degree-n, weight <= W component.
class SliceBasis {
public:
	SliceBasis(int degree, int max_weight, OperationSignature sig, std::vector<Term> terms);

	int degree() const { return degree_; }
	int max_weight() const { return max_weight_; }
	const OperationSignature& signature() const { return sig_; }
	const std::vector<Term>& terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }

	std::optional<std::size_t> index_of(const Term& t) const;

	/// Dense coordinates. Throws Error when a monomial lies outside the slice.
	std::vector<Rational> to_vector(const Poly& p) const;
	/// Sparse coordinates in increasing index order.
	std::vector<std::pair<std::size_t, Rational>> to_sparse(const Poly& p) const;
	Poly from_vector(const std::vector<Rational>& v) const;

private:
	int degree_;
	int max_weight_;
	OperationSignature sig_;
	std::vector<Term> terms_;
	std::unordered_map<Term, std::size_t, TermHash> index_;
};

/// All normal-form multilinear terms in x_1..x_n with total dpow <= W.
/// Throws ResourceError past `cap` terms, SignatureError for unary ops.
SliceBasis enumerate_basis(int n, int max_weight, const OperationSignature& sig, std::size_t cap = default_basis_cap);

/// Bitmask with bits 1..n set.
inline std::uint64_t variables_mask(int n)
{
	return n >= 63 ? ~std::uint64_t(1) : ((std::uint64_t(1) << (n + 1)) - 2);
}

} // namespace gpforge
