#include "gpforge/linalg.hpp"

#include <algorithm>

namespace gpforge {

namespace {

// a*u - b*v for sparse integer vectors.
SparseIntVec combine(const Integer& a, const SparseIntVec& u, const Integer& b, const SparseIntVec& v)
{
	SparseIntVec out;
	out.reserve(u.size() + v.size());
	std::size_t i = 0, j = 0;
	while (i < u.size() || j < v.size()) {
		if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
			out.emplace_back(u[i].first, a * u[i].second);
			++i;
		} else if (i == u.size() || v[j].first < u[i].first) {
			out.emplace_back(v[j].first, -b * v[j].second);
			++j;
		} else {
			Integer x = a * u[i].second - b * v[j].second;
			if (x != 0)
				out.emplace_back(u[i].first, std::move(x));
			++i;
			++j;
		}
	}
	return out;
}

void divide_common_content(SparseIntVec& a, SparseIntVec& b)
{
	Integer g = 0;
	for (const auto& [i, x] : a)
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
	for (const auto& [i, x] : b)
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
	if (g <= 1)
		return;
	for (auto& [i, x] : a)
		mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
	for (auto& [i, x] : b)
		mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

} // namespace

std::pair<SparseIntVec, Integer> clear_denominators(const SparseRatVec& v)
{
	Integer scale = 1;
	for (const auto& [i, q] : v)
		mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
	SparseIntVec out;
	out.reserve(v.size());
	for (const auto& [i, q] : v) {
		if (q == 0)
			continue;
		Integer x = scale / q.get_den() * q.get_num();
		out.emplace_back(i, std::move(x));
	}
	std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
	return {std::move(out), std::move(scale)};
}

bool IncrementalEchelon::add(const SparseRatVec& row, std::size_t id)
{
	auto [values, scale] = clear_denominators(row);
	if (input_scale_.size() <= id)
		input_scale_.resize(id + 1, Integer(1));
	input_scale_[id] = scale;
	SparseIntVec comb{{id, Integer(1)}};
	// The leading column must be a non-pivot for the row to be new; pivots
	// elsewhere in the row do not matter for echelon form.
	while (!values.empty() && pivot_row_[values.front().first] != npos) {
		const Row& r = rows_[pivot_row_[values.front().first]];
		Integer a = r.values.front().second;
		Integer b = values.front().second;
		Integer g;
		mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
		a /= g;
		b /= g;
		values = combine(a, values, b, r.values);
		comb = combine(a, comb, b, r.combination);
		divide_common_content(values, comb);
	}
	if (values.empty())
		return false;
	pivot_row_[values.front().first] = rows_.size();
	rows_.push_back({std::move(values), std::move(comb)});
	return true;
}

std::optional<SparseRatVec> IncrementalEchelon::solve(const SparseRatVec& target) const
{
	auto [values, scale] = clear_denominators(target);
	// The target occupies a pseudo id past every input id.
	const std::size_t target_id = input_scale_.size();
	SparseIntVec comb{{target_id, Integer(1)}};
	while (!values.empty()) {
		std::size_t r = pivot_row_[values.front().first];
		if (r == npos)
			return std::nullopt;
		const Row& row = rows_[r];
		Integer a = row.values.front().second;
		Integer b = values.front().second;
		Integer g;
		mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
		a /= g;
		b /= g;
		values = combine(a, values, b, row.values);
		comb = combine(a, comb, b, row.combination);
		divide_common_content(values, comb);
	}
	// Invariant: m*w + sum c_j*u_j == 0, where w = scale*target and u_j = s_j*row_j.
	Integer m = 0;
	for (const auto& [i, x] : comb)
		if (i == target_id)
			m = x;
	SparseRatVec out;
	for (const auto& [i, x] : comb) {
		if (i == target_id)
			continue;
		Rational c(x * input_scale_[i], m * scale);
		c.canonicalize();
		c = -c;
		if (c != 0)
			out.emplace_back(i, c);
	}
	return out;
}

bool IncrementalEchelon::in_span(const SparseRatVec& target) const
{
	return solve(target).has_value();
}

SparseRatVec to_sparse(const DenseVec& v)
{
	SparseRatVec out;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (v[i] != 0)
			out.emplace_back(i, v[i]);
	return out;
}

std::size_t rank(const std::vector<DenseVec>& rows)
{
	return independent_subset(rows).size();
}

std::vector<DenseVec> independent_subset(const std::vector<DenseVec>& rows)
{
	std::vector<DenseVec> out;
	if (rows.empty())
		return out;
	IncrementalEchelon ech(rows.front().size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		if (ech.add(to_sparse(rows[i]), i))
			out.push_back(rows[i]);
	return out;
}

bool in_span(const std::vector<DenseVec>& rows, const DenseVec& v)
{
	auto sv = to_sparse(v);
	if (sv.empty())
		return true;
	if (rows.empty())
		return false;
	IncrementalEchelon ech(v.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		ech.add(to_sparse(rows[i]), i);
	return ech.in_span(sv);
}

std::optional<std::vector<DenseVec>> inverse(const std::vector<DenseVec>& m)
{
	const std::size_t n = m.size();
	std::vector<DenseVec> a = m;
	std::vector<DenseVec> inv(n, DenseVec(n, Rational(0)));
	for (std::size_t i = 0; i < n; ++i)
		inv[i][i] = 1;
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t p = col;
		while (p < n && a[p][col] == 0)
			++p;
		if (p == n)
			return std::nullopt;
		std::swap(a[p], a[col]);
		std::swap(inv[p], inv[col]);
		Rational s = 1 / a[col][col];
		for (std::size_t j = 0; j < n; ++j) {
			a[col][j] *= s;
			inv[col][j] *= s;
		}
		for (std::size_t r = 0; r < n; ++r) {
			if (r == col || a[r][col] == 0)
				continue;
			Rational f = a[r][col];
			for (std::size_t j = 0; j < n; ++j) {
				a[r][j] -= f * a[col][j];
				inv[r][j] -= f * inv[col][j];
			}
		}
	}
	return inv;
}

} // namespace gpforge
