#include "gpforge/slice.hpp"

#include "gpforge/error.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gpforge {

TermEnumerator::TermEnumerator(OperationSignature sig, std::size_t cap) : sig_(std::move(sig)), cap_(cap)
{
	if (sig_.has_unary_op())
		throw SignatureError("slices are unbounded for signatures with unary operations");
	sig_.require_binary_op();
}

const std::vector<Term>& TermEnumerator::terms(std::uint64_t vars, int weight)
{
	auto key = std::make_pair(vars, weight);
	if (auto it = memo_.find(key); it != memo_.end())
		return it->second;

	std::vector<Term> out;
	if (vars != 0 && weight >= 0) {
		if (std::popcount(vars) == 1) {
			int v = std::countr_zero(vars);
			if (v != hole_index || weight == 0)
				out.push_back(Term::var(v, weight));
		} else {
			std::set<Term> found;
			// Proper nonempty submasks of vars for the left child.
			for (std::uint64_t left = (vars - 1) & vars; left != 0; left = (left - 1) & vars) {
				std::uint64_t right = vars & ~left;
				for (const auto& op : sig_.ops()) {
					// Unordered children: visit each split once, sort afterwards.
					if (op.symmetry != Symmetry::none && left > right)
						continue;
					for (int wl = 0; wl <= weight; ++wl) {
						const auto& ls = terms(left, wl);
						const auto& rs = terms(right, weight - wl);
						for (const auto& l : ls)
							for (const auto& r : rs) {
								if (op.symmetry == Symmetry::none || l < r)
									found.insert(Term::apply(op.name, {l, r}));
								else
									found.insert(Term::apply(op.name, {r, l}));
								if (found.size() > cap_)
									throw ResourceError("term enumeration exceeded cap of " +
									                    std::to_string(cap_));
							}
					}
				}
			}
			out.assign(found.begin(), found.end());
		}
	}
	return memo_.emplace(key, std::move(out)).first->second;
}

SliceBasis::SliceBasis(int degree, int max_weight, OperationSignature sig, std::vector<Term> terms)
    : degree_(degree), max_weight_(max_weight), sig_(std::move(sig)), terms_(std::move(terms))
{
	index_.reserve(terms_.size());
	for (std::size_t i = 0; i < terms_.size(); ++i)
		if (!index_.emplace(terms_[i], i).second)
			throw Error("duplicate term in slice basis: " + to_string(terms_[i]));
}

std::optional<std::size_t> SliceBasis::index_of(const Term& t) const
{
	auto it = index_.find(t);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

std::vector<std::pair<std::size_t, Rational>> SliceBasis::to_sparse(const Poly& p) const
{
	std::vector<std::pair<std::size_t, Rational>> out;
	out.reserve(p.size());
	for (const auto& [t, c] : p) {
		auto idx = index_of(t);
		if (!idx)
			throw Error("term " + to_string(t, sig_.derivation_name()) + " lies outside the degree-" +
			            std::to_string(degree_) + " weight<=" + std::to_string(max_weight_) + " slice");
		out.emplace_back(*idx, c);
	}
	std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
	return out;
}

std::vector<Rational> SliceBasis::to_vector(const Poly& p) const
{
	std::vector<Rational> v(terms_.size());
	for (auto& [i, c] : to_sparse(p))
		v[i] = c;
	return v;
}

Poly SliceBasis::from_vector(const std::vector<Rational>& v) const
{
	if (v.size() != terms_.size())
		throw Error("vector length does not match slice dimension");
	Poly p;
	for (std::size_t i = 0; i < v.size(); ++i)
		p.add_term(terms_[i], v[i]);
	return p;
}

SliceBasis enumerate_basis(int n, int max_weight, const OperationSignature& sig, std::size_t cap)
{
	if (n < 1 || max_weight < 0)
		throw Error("slice requires n >= 1 and W >= 0");
	if (n > 62)
		throw ResourceError("slice degree above 62 is not supported");
	TermEnumerator gen(sig, cap);
	std::vector<Term> all;
	for (int w = 0; w <= max_weight; ++w) {
		const auto& ts = gen.terms(variables_mask(n), w);
		all.insert(all.end(), ts.begin(), ts.end());
		if (all.size() > cap)
			throw ResourceError("slice basis exceeds cap of " + std::to_string(cap) + " terms");
	}
	std::sort(all.begin(), all.end());
	return SliceBasis(n, max_weight, sig, std::move(all));
}

} // namespace gpforge
