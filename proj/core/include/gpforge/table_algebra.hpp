#pragma once

#include "gpforge/linalg.hpp"
#include "gpforge/poly.hpp"
#include "gpforge/signature.hpp"
#include "gpforge/variety.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gpforge {

/// Coordinates of an algebra element in the model basis, sparse and sorted.
using Element = SparseRatVec;

Element basis_element(std::size_t i);
Element add(const Element& a, const Element& b);
Element scale(const Rational& c, const Element& a);
/// acc += c * x
void axpy(Element& acc, const Rational& c, const Element& x);
DenseVec to_dense(const Element& e, std::size_t dim);
std::string to_string(const Element& e);

class TableAlgebra;
struct CheckResult;
CheckResult check_axioms(TableAlgebra& m, const Variety& v);

/**
 * Finite-dimensional algebra given by structure constants: e_i op e_j is the
 * element table(op)[i*dim + j]. An optional derivation is stored by the
 * images of the basis vectors.
 *
 * Variety names enter `certified()` only through check_axioms().
 */
class TableAlgebra {
public:
	explicit TableAlgebra(std::size_t dim = 0) : dim_(dim) {}

	std::size_t dim() const { return dim_; }

	/// Declares a binary operation with an all-zero table.
	void add_op(std::string name, Symmetry symmetry);
	void set_product(std::string_view op, std::size_t i, std::size_t j, Element value);
	const Element& product(std::string_view op, std::size_t i, std::size_t j) const;
	Element multiply(std::string_view op, const Element& a, const Element& b) const;
	bool has_op(std::string_view name) const;
	const std::vector<Operation>& ops() const { return ops_; }

	/// images[i] = D(e_i). Replaces any earlier derivation.
	void set_derivation(std::string name, std::vector<Element> images);
	bool has_derivation() const { return !derivation_name_.empty(); }
	const std::string& derivation_name() const { return derivation_name_; }
	const std::vector<Element>& derivation() const { return derivation_; }
	Element apply_derivation(const Element& a, int times = 1) const;

	OperationSignature signature() const;

	const std::set<std::string>& certified() const { return certified_; }
	/// Forgets every certification (used after structural edits).
	void clear_certified() { certified_.clear(); }

	/// Same algebra with a renamed or differently flagged operation table.
	TableAlgebra with_op_renamed(std::string_view from, std::string to, Symmetry symmetry) const;

	/// Checks the symmetry flags of every table; returns a description of the
	/// first violation.
	std::optional<std::string> validate() const;

	friend bool operator==(const TableAlgebra&, const TableAlgebra&) = default;

private:
	friend CheckResult check_axioms(TableAlgebra& m, const Variety& v);

	std::vector<Element>& table(std::string_view op);
	const std::vector<Element>& table(std::string_view op) const;

	std::size_t dim_;
	std::vector<Operation> ops_;
	std::map<std::string, std::vector<Element>, std::less<>> tables_;
	std::string derivation_name_;
	std::vector<Element> derivation_;
	std::set<std::string> certified_;
};

/// Value of p with x_i replaced by assignment[i-1]. Throws ModelError on an
/// unknown op or a derivation the model does not have.
Element eval_poly(const TableAlgebra& m, const Poly& p, const std::vector<Element>& assignment);
/// Value of p on basis vectors e_{tuple[0]}, e_{tuple[1]}, ...
Element eval_identity(const TableAlgebra& m, const Poly& p, const std::vector<std::size_t>& tuple);

struct Violation {
	std::vector<std::size_t> tuple;
	Element value;
};

/// First basis tuple (in lexicographic order) where p does not vanish.
std::optional<Violation> first_violation(const TableAlgebra& m, const Poly& p);

struct CheckResult {
	bool ok = true;
	std::string failed; // axiom name, "symmetry:<op>" or "leibniz:<op>"
	std::vector<std::size_t> tuple;
	Element residual;
};

/// Exhaustively checks the symmetry flags of the variety's operations, the
/// Leibniz rule of the derivation on every binary operation, and every
/// axiom on every basis tuple. Records the variety on success. Throws
/// ModelError when the model lacks an operation or derivation of `v`.
CheckResult check_axioms(TableAlgebra& m, const Variety& v);

struct LeibnizDefect {
	std::size_t i = 0;
	std::size_t j = 0;
	Element defect; // D(e_i op e_j) - D(e_i) op e_j - e_i op D(e_j)
};

/// Every basis pair on which the derivation fails the Leibniz rule for `op`.
std::vector<LeibnizDefect> leibniz_defects(const TableAlgebra& m, std::string_view op);

/// Spanning vectors of the subspace, reduced to a basis in input order.
std::vector<Element> independent_elements(const std::vector<Element>& v, std::size_t dim);
bool in_span(const std::vector<Element>& basis, const Element& v, std::size_t dim);

} // namespace gpforge
