#pragma once

#include "gpforge/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gpforge {

using SparseRatVec = std::vector<std::pair<std::size_t, Rational>>;
using SparseIntVec = std::vector<std::pair<std::size_t, Integer>>;

/**
 * Row echelon form built one row at a time with fraction-free integer
 * elimination. Every stored row remembers how it was obtained from the
 * original input rows, so span membership queries return an explicit
 * combination of inputs.
 *
 * Elimination always uses the lowest pivot column first and rows are
 * processed in insertion order, so results are reproducible.
 */
class IncrementalEchelon {
public:
	explicit IncrementalEchelon(std::size_t columns) : columns_(columns), pivot_row_(columns, npos) {}

	/// Adds input row `id`. Returns true when the rank grew.
	bool add(const SparseRatVec& row, std::size_t id);

	std::size_t rank() const { return rows_.size(); }
	std::size_t columns() const { return columns_; }

	/// Coefficients c_id with sum c_id * row_id == target, or nullopt when the
	/// target is outside the span. Only rows that raised the rank appear.
	std::optional<SparseRatVec> solve(const SparseRatVec& target) const;

	bool in_span(const SparseRatVec& target) const;

private:
	static constexpr std::size_t npos = static_cast<std::size_t>(-1);

	struct Row {
		SparseIntVec values;      // leading entry is the pivot
		SparseIntVec combination; // over input ids
	};

	std::size_t columns_;
	std::vector<std::size_t> pivot_row_;
	std::vector<Row> rows_;
	std::vector<Integer> input_scale_; // denominator lcm of each input row, by id
};

/// Integer vector v/scale equal to the rational vector (scale > 0).
std::pair<SparseIntVec, Integer> clear_denominators(const SparseRatVec& v);

/// Dense helpers for small subspace computations.
using DenseVec = std::vector<Rational>;
std::size_t rank(const std::vector<DenseVec>& rows);
bool in_span(const std::vector<DenseVec>& rows, const DenseVec& v);
/// A maximal linearly independent subset of rows, in input order.
std::vector<DenseVec> independent_subset(const std::vector<DenseVec>& rows);

SparseRatVec to_sparse(const DenseVec& v);

/// Inverse of a square matrix given by rows, or nullopt when singular.
std::optional<std::vector<DenseVec>> inverse(const std::vector<DenseVec>& m);

} // namespace gpforge
