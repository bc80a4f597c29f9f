#include "gpforge/model_families.hpp"

#include "gpforge/error.hpp"
#include "gpforge/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace gpforge {

namespace {

std::string describe(const CheckResult& r)
{
	std::string s = r.failed + " at (";
	for (std::size_t i = 0; i < r.tuple.size(); ++i)
		s += (i ? ", e" : "e") + std::to_string(r.tuple[i]);
	return s + "): " + to_string(r.residual);
}

void certify_or_throw(TableAlgebra& m, const Variety& v, const std::string& what)
{
	auto r = check_axioms(m, v);
	if (!r.ok)
		throw ModelError(what + " is not a " + v.name() + " algebra: " + describe(r));
}

int total_degree(const std::vector<int>& e)
{
	return std::accumulate(e.begin(), e.end(), 0);
}

using Exponent = std::vector<int>;

bool exp_less(const Exponent& a, const Exponent& b)
{
	int da = total_degree(a), db = total_degree(b);
	if (da != db)
		return da < db;
	return a > b;
}

// A random order ideal of nonzero exponent vectors in `max_vars` variables.
// Starts from x_1 and grows by either a new generator (probability
// `new_var_bias` while variables remain) or a monomial all of whose
// divisors by one variable are already present.
std::vector<Exponent> random_order_ideal(std::size_t size, int max_vars, double new_var_bias, SeededRng& rng,
                                         int initial_vars = 1)
{
	std::vector<Exponent> s;
	int nvars = 0;
	auto unit = [&](int v) {
		Exponent e(max_vars, 0);
		e[v] = 1;
		return e;
	};
	while (nvars < initial_vars && s.size() < size) {
		s.push_back(unit(nvars));
		++nvars;
	}
	while (s.size() < size) {
		std::vector<Exponent> higher;
		for (const auto& m : s)
			for (int v = 0; v < nvars; ++v) {
				Exponent c = m;
				++c[v];
				if (std::find(s.begin(), s.end(), c) != s.end() ||
				    std::find(higher.begin(), higher.end(), c) != higher.end())
					continue;
				bool closed = true;
				for (int u = 0; u < nvars && closed; ++u) {
					if (c[u] == 0)
						continue;
					Exponent d = c;
					--d[u];
					if (total_degree(d) > 0 && std::find(s.begin(), s.end(), d) == s.end())
						closed = false;
				}
				if (closed)
					higher.push_back(c);
			}
		std::sort(higher.begin(), higher.end(), exp_less);
		if (nvars < max_vars && (higher.empty() || rng.chance(new_var_bias))) {
			s.push_back(unit(nvars));
			++nvars;
		} else {
			s.push_back(higher[rng.below(higher.size())]);
		}
	}
	std::sort(s.begin(), s.end(), exp_less);
	return s;
}

// Monomial quotient algebra on `basis` (closed under division) with op "mul".
TableAlgebra monomial_algebra(const std::vector<Exponent>& basis)
{
	const std::size_t n = basis.size();
	TableAlgebra m(n);
	m.add_op("mul", Symmetry::symmetric);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Exponent s(basis[i].size());
			for (std::size_t v = 0; v < s.size(); ++v)
				s[v] = basis[i][v] + basis[j][v];
			auto it = std::find(basis.begin(), basis.end(), s);
			if (it != basis.end())
				m.set_product("mul", i, j, basis_element(static_cast<std::size_t>(it - basis.begin())));
		}
	return m;
}

Rational random_scalar(SeededRng& rng)
{
	static const Rational choices[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3),
	                                   Rational(-2, 3)};
	return choices[rng.below(std::size(choices))];
}

TableAlgebra direct_sum(const TableAlgebra& a, const TableAlgebra& b)
{
	const std::size_t n = a.dim() + b.dim();
	TableAlgebra out(n);
	auto shift = [](const Element& e, std::size_t by) {
		Element r = e;
		for (auto& [k, x] : r)
			k += by;
		return r;
	};
	for (const auto& o : a.ops()) {
		out.add_op(o.name, o.symmetry);
		for (std::size_t i = 0; i < a.dim(); ++i)
			for (std::size_t j = 0; j < a.dim(); ++j)
				out.set_product(o.name, i, j, a.product(o.name, i, j));
		for (std::size_t i = 0; i < b.dim(); ++i)
			for (std::size_t j = 0; j < b.dim(); ++j)
				out.set_product(o.name, a.dim() + i, a.dim() + j, shift(b.product(o.name, i, j), a.dim()));
	}
	std::vector<Element> d = a.derivation();
	for (const auto& e : b.derivation())
		d.push_back(shift(e, a.dim()));
	out.set_derivation("D", std::move(d));
	return out;
}

TableAlgebra random_commassoc_raw(std::size_t dim, double sparsity, SeededRng& rng, int depth)
{
	if (dim >= 2 && depth < 2 && rng.chance(0.25)) {
		std::size_t d1 = 1 + rng.below(dim - 1);
		TableAlgebra a = random_commassoc_raw(d1, sparsity, rng, depth + 1);
		TableAlgebra b = random_commassoc_raw(dim - d1, sparsity, rng, depth + 1);
		return direct_sum(a, b);
	}
	const bool unital = rng.chance(0.2);
	std::vector<Exponent> basis;
	if (unital)
		basis.push_back(Exponent(3, 0));
	if (dim > basis.size()) {
		auto rest = random_order_ideal(dim - basis.size(), 3, sparsity, rng);
		basis.insert(basis.end(), rest.begin(), rest.end());
	}
	TableAlgebra m = monomial_algebra(basis);
	std::vector<long> weight(3);
	for (auto& w : weight)
		w = rng.between(-2, 3);
	std::vector<Element> d(dim);
	for (std::size_t i = 0; i < dim; ++i) {
		long s = 0;
		for (int v = 0; v < 3; ++v)
			s += weight[v] * basis[i][v];
		if (s != 0)
			d[i] = {{i, Rational(s)}};
	}
	m.set_derivation("D", std::move(d));
	return m;
}

TableAlgebra randomize_basis(const TableAlgebra& m, SeededRng& rng, bool mix)
{
	const std::size_t n = m.dim();
	std::vector<DenseVec> cols(n, DenseVec(n, Rational(0)));
	for (std::size_t i = 0; i < n; ++i) {
		cols[i][i] = random_scalar(rng);
		if (mix)
			for (std::size_t k = i + 1; k < n; ++k)
				if (rng.chance(0.4))
					cols[i][k] = rng.between(-1, 1);
	}
	return change_basis(m, cols);
}

} // namespace

TableAlgebra truncated_poly(int n, TruncatedDerivation kind, int j)
{
	if (n < 1)
		throw ModelError("truncated polynomial model needs n >= 1");
	if (kind == TruncatedDerivation::monomial && j < 0)
		throw ModelError("monomial derivation needs j >= 0");
	const std::size_t dim = static_cast<std::size_t>(n);
	TableAlgebra m(dim);
	m.add_op("mul", Symmetry::symmetric);
	for (int p = 0; p < n; ++p)
		for (int q = 0; q < n; ++q)
			if (p + q < n)
				m.set_product("mul", p, q, basis_element(p + q));
	std::vector<Element> d(dim);
	for (int p = 1; p < n; ++p) {
		int target = kind == TruncatedDerivation::euler ? p : p + j - 1;
		if (target < n)
			d[p] = {{static_cast<std::size_t>(target), Rational(p)}};
	}
	m.set_derivation("D", std::move(d));
	std::string label = kind == TruncatedDerivation::euler ? "x d/dx" : "x^" + std::to_string(j) + " d/dx";
	certify_or_throw(m, builtin("CommAssoc"), "F[x]/(x^" + std::to_string(n) + ") with " + label);
	return m;
}

WordCombination shuffle(const Word& u, const Word& v)
{
	WordCombination out;
	if (u.empty()) {
		out[v] = 1;
		return out;
	}
	if (v.empty()) {
		out[u] = 1;
		return out;
	}
	// Split on the last letter.
	Word u0(u.begin(), u.end() - 1), v0(v.begin(), v.end() - 1);
	for (auto& [w, c] : shuffle(u0, v)) {
		Word x = w;
		x.push_back(u.back());
		out[x] += c;
	}
	for (auto& [w, c] : shuffle(u, v0)) {
		Word x = w;
		x.push_back(v.back());
		out[x] += c;
	}
	return out;
}

WordCombination half_shuffle(const Word& u, const Word& v)
{
	if (u.empty() || v.empty())
		throw Error("half-shuffle is defined on nonempty words");
	Word v0(v.begin(), v.end() - 1);
	WordCombination out;
	for (auto& [w, c] : shuffle(u, v0)) {
		Word x = w;
		x.push_back(v.back());
		out[x] += c;
	}
	return out;
}

FreeZinbiel::FreeZinbiel(int generators, int cap) : generators_(generators), cap_(cap)
{
	if (generators < 1 || cap < 1)
		throw ModelError("free Zinbiel model needs k >= 1 generators and cap >= 1");
	std::vector<Word> layer{{}};
	for (int len = 1; len <= cap; ++len) {
		std::vector<Word> next;
		for (const auto& w : layer)
			for (int g = 0; g < generators; ++g) {
				Word x = w;
				x.push_back(g);
				next.push_back(std::move(x));
			}
		std::sort(next.begin(), next.end());
		words_.insert(words_.end(), next.begin(), next.end());
		layer = std::move(next);
		if (words_.size() > 4096)
			throw ResourceError("free Zinbiel model exceeds 4096 basis words");
	}
	for (std::size_t i = 0; i < words_.size(); ++i)
		index_.emplace(words_[i], i);
}

std::size_t FreeZinbiel::index_of(const Word& w) const
{
	auto it = index_.find(w);
	if (it == index_.end())
		throw ModelError("word outside the free Zinbiel basis");
	return it->second;
}

std::string FreeZinbiel::word_name(const Word& w) const
{
	std::string s;
	for (int g : w)
		s += generators_ <= 3 ? std::string(1, "xyz"[g]) : "g" + std::to_string(g);
	return s;
}

TableAlgebra FreeZinbiel::algebra() const
{
	const std::size_t n = words_.size();
	TableAlgebra m(n);
	m.add_op("prod", Symmetry::none);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (words_[i].size() + words_[j].size() > static_cast<std::size_t>(cap_))
				continue;
			Element e;
			for (const auto& [w, c] : half_shuffle(words_[i], words_[j]))
				e.emplace_back(index_of(w), Rational(c));
			std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
			m.set_product("prod", i, j, std::move(e));
		}
	m.set_derivation("D", std::vector<Element>(n));
	return m;
}

std::vector<Element> FreeZinbiel::extend_derivation(const std::vector<Element>& images, bool strict) const
{
	if (images.size() != static_cast<std::size_t>(generators_))
		throw ModelError("extend_derivation needs one image per generator");
	using Combo = std::map<Word, Rational>;
	auto to_combo = [&](const Element& e) {
		Combo c;
		for (const auto& [i, x] : e) {
			if (i >= words_.size())
				throw ModelError("derivation image outside the model");
			c[words_[i]] += x;
		}
		return c;
	};
	// Full (untruncated) half-shuffle of combinations.
	auto product = [&](const Combo& a, const Combo& b) {
		Combo out;
		for (const auto& [u, x] : a)
			for (const auto& [v, y] : b)
				for (const auto& [w, c] : half_shuffle(u, v))
					out[w] += x * y * Rational(c);
		return out;
	};
	std::vector<Combo> d(words_.size());
	for (std::size_t i = 0; i < words_.size(); ++i) {
		const Word& w = words_[i];
		Combo value;
		if (w.size() == 1) {
			value = to_combo(images[w[0]]);
		} else {
			Word u(w.begin(), w.end() - 1), a{w.back()};
			value = product(d[index_of(u)], {{a, Rational(1)}});
			for (const auto& [x, c] : product({{u, Rational(1)}}, d[index_of(a)]))
				value[x] += c;
		}
		Combo kept;
		for (const auto& [x, c] : value) {
			if (c == 0)
				continue;
			if (x.size() > static_cast<std::size_t>(cap_)) {
				if (strict)
					throw ModelError("derivation of word " + word_name(w) + " escapes the cap " +
					                 std::to_string(cap_) + " with nonzero coefficient on " + word_name(x));
				continue;
			}
			kept[x] = c;
		}
		d[i] = std::move(kept);
	}
	std::vector<Element> out(words_.size());
	for (std::size_t i = 0; i < words_.size(); ++i) {
		for (const auto& [x, c] : d[i])
			out[i].emplace_back(index_of(x), c);
		std::sort(out[i].begin(), out[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
	}
	return out;
}

TableAlgebra FreeZinbiel::with_derivation(const std::vector<Element>& images, bool strict) const
{
	TableAlgebra m = algebra();
	m.set_derivation("D", extend_derivation(images, strict));
	certify_or_throw(m, builtin("Zinbiel"), "free Zinbiel model with the extended derivation");
	return m;
}

TableAlgebra integral_zinbiel(int n)
{
	if (n < 1)
		throw ModelError("integral model needs n >= 1");
	const std::size_t dim = static_cast<std::size_t>(n);
	TableAlgebra m(dim);
	m.add_op("prod", Symmetry::none);
	for (int p = 0; p < n; ++p)
		for (int q = 0; q < n; ++q)
			if (p + q + 1 < n)
				m.set_product("prod", p, q, {{static_cast<std::size_t>(p + q + 1), Rational(1, p + 1)}});
	std::vector<Element> d(dim);
	for (int p = 1; p < n; ++p)
		d[p] = {{static_cast<std::size_t>(p - 1), Rational(p)}};
	m.set_derivation("D", std::move(d));
	return m;
}

std::vector<LeibnizDefect> integral_filtered_defects(const TableAlgebra& integral)
{
	std::vector<LeibnizDefect> out;
	const std::size_t n = integral.dim();
	for (auto& d : leibniz_defects(integral, "prod"))
		if (d.i >= 1 && d.j >= 1 && d.i + d.j + 1 < n)
			out.push_back(std::move(d));
	return out;
}

namespace {

TableAlgebra log_canonical_on(const std::vector<Exponent>& basis, const Rational& lambda)
{
	TableAlgebra m = monomial_algebra(basis);
	m.add_op("br", Symmetry::antisymmetric);
	const std::size_t n = basis.size();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const auto& p = m.product("mul", i, j);
			if (p.empty())
				continue;
			long c = basis[i][0] * basis[j][1] - basis[i][1] * basis[j][0];
			if (c != 0)
				m.set_product("br", i, j, scale(lambda * c, p));
		}
	m.set_derivation("D", std::vector<Element>(n));
	return m;
}

} // namespace

TableAlgebra log_canonical_poisson(int n)
{
	if (n < 2)
		throw ModelError("log-canonical model needs n >= 2");
	std::vector<Exponent> basis;
	for (int deg = 1; deg < n; ++deg)
		for (int a = deg; a >= 0; --a)
			basis.push_back({a, deg - a});
	TableAlgebra m = log_canonical_on(basis, 1);
	certify_or_throw(m, builtin("Poisson"), "log-canonical model");
	return m;
}

TableAlgebra zero_algebra(std::size_t dim)
{
	TableAlgebra m(dim);
	m.add_op("mul", Symmetry::symmetric);
	m.add_op("br", Symmetry::antisymmetric);
	m.set_derivation("D", std::vector<Element>(dim));
	certify_or_throw(m, builtin("GeneralizedPoisson"), "zero algebra");
	return m;
}

TableAlgebra change_basis(const TableAlgebra& m, const std::vector<DenseVec>& columns)
{
	const std::size_t n = m.dim();
	if (columns.size() != n)
		throw ModelError("basis change needs one vector per basis element");
	std::vector<DenseVec> rows(n, DenseVec(n, Rational(0)));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = 0; k < n; ++k)
			rows[k][i] = columns[i].at(k);
	auto inv = inverse(rows);
	if (!inv)
		throw ModelError("basis change matrix is singular");
	auto to_new = [&](const Element& old) {
		DenseVec y(n, Rational(0));
		for (const auto& [k, x] : old)
			for (std::size_t r = 0; r < n; ++r)
				if ((*inv)[r][k] != 0)
					y[r] += (*inv)[r][k] * x;
		return to_sparse(y);
	};
	std::vector<Element> f(n);
	for (std::size_t i = 0; i < n; ++i)
		f[i] = to_sparse(columns[i]);
	TableAlgebra out(n);
	for (const auto& o : m.ops()) {
		out.add_op(o.name, o.symmetry);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				out.set_product(o.name, i, j, to_new(m.multiply(o.name, f[i], f[j])));
	}
	if (m.has_derivation()) {
		std::vector<Element> d(n);
		for (std::size_t i = 0; i < n; ++i)
			d[i] = to_new(m.apply_derivation(f[i]));
		out.set_derivation(m.derivation_name(), std::move(d));
	}
	return out;
}

TableAlgebra random_commassoc_der(std::size_t dim, double sparsity, std::uint64_t seed)
{
	if (dim == 0 || dim > 64)
		throw ResourceError("random model dimension must be in 1..64");
	SeededRng rng(seed);
	TableAlgebra m = random_commassoc_raw(dim, sparsity, rng, 0);
	m = randomize_basis(m, rng, rng.chance(1.0 / 3));
	certify_or_throw(m, builtin("CommAssoc"), "random model");
	return m;
}

TableAlgebra random_log_canonical(std::size_t dim, std::uint64_t seed)
{
	if (dim == 0 || dim > 64)
		throw ResourceError("random model dimension must be in 1..64");
	SeededRng rng(seed);
	auto basis = random_order_ideal(dim, 2, 0.5, rng, dim >= 2 ? 2 : 1);
	TableAlgebra m = log_canonical_on(basis, random_scalar(rng));
	m = randomize_basis(m, rng, rng.chance(0.25));
	certify_or_throw(m, builtin("Poisson"), "random log-canonical model");
	return m;
}

TableAlgebra random_noncommutative_poisson(std::size_t dim, std::uint64_t seed)
{
	if (dim == 0 || dim > 64)
		throw ResourceError("random model dimension must be in 1..64");
	SeededRng rng(seed);
	int letters = dim >= 2 && rng.chance(0.7) ? 2 : 1;
	std::vector<Word> s;
	for (int g = 0; g < letters; ++g)
		s.push_back({g});
	auto has = [&](const Word& w) { return std::find(s.begin(), s.end(), w) != s.end(); };
	while (s.size() < dim) {
		std::vector<Word> cand;
		for (const auto& w : s)
			for (int g = 0; g < letters; ++g) {
				Word x = w;
				x.push_back(g);
				if (x.size() <= 4 && !has(x) && has(Word(x.begin() + 1, x.end())) &&
				    std::find(cand.begin(), cand.end(), x) == cand.end())
					cand.push_back(x);
			}
		if (cand.empty())
			break;
		std::sort(cand.begin(), cand.end());
		s.push_back(cand[rng.below(cand.size())]);
	}
	std::stable_sort(s.begin(), s.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
	const std::size_t n = s.size();
	TableAlgebra m(n);
	m.add_op("mul", Symmetry::none);
	m.add_op("br", Symmetry::antisymmetric);
	Rational lambda = random_scalar(rng);
	auto concat = [&](std::size_t i, std::size_t j) -> Element {
		Word w = s[i];
		w.insert(w.end(), s[j].begin(), s[j].end());
		auto it = std::find(s.begin(), s.end(), w);
		return it == s.end() ? Element{} : basis_element(static_cast<std::size_t>(it - s.begin()));
	};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			m.set_product("mul", i, j, concat(i, j));
			m.set_product("br", i, j, scale(lambda, add(concat(i, j), scale(-1, concat(j, i)))));
		}
	m.set_derivation("D", std::vector<Element>(n));
	return m;
}

std::vector<LabeledModel> model_pool(const OperationSignature& sig, std::uint64_t seed, int random_count)
{
	std::vector<LabeledModel> dot_bracket;
	std::vector<LabeledModel> all;
	for (int n = 2; n <= 5; ++n) {
		std::string label = "truncpoly(n=" + std::to_string(n) + ",der=euler)";
		TableAlgebra t = truncated_poly(n);
		all.push_back({label, t});
		dot_bracket.push_back({"derived_bracket(" + label + ")", derived_bracket(t)});
	}
	{
		TableAlgebra t = truncated_poly(4, TruncatedDerivation::monomial, 2);
		all.push_back({"truncpoly(n=4,der=monomial,j=2)", t});
		dot_bracket.push_back({"derived_bracket(truncpoly(n=4,der=monomial,j=2))", derived_bracket(t)});
	}
	for (int n = 3; n <= 4; ++n)
		dot_bracket.push_back({"logcanonical(" + std::to_string(n) + ")", log_canonical_poisson(n)});
	for (std::size_t d = 1; d <= 2; ++d)
		dot_bracket.push_back({"zero(" + std::to_string(d) + ")", zero_algebra(d)});
	SeededRng rng(seed);
	for (int i = 0; i < random_count; ++i) {
		std::uint64_t s = rng.next();
		std::size_t dim = 1 + rng.below(4);
		std::string args = "(dim=" + std::to_string(dim) + ",seed=" + std::to_string(s) + ")";
		if (i % 3 == 2) {
			dot_bracket.push_back({"random_logcanonical" + args, random_log_canonical(dim, s)});
		} else {
			TableAlgebra r = random_commassoc_der(dim, 0.3, s);
			all.push_back({"random" + args, r});
			dot_bracket.push_back({"derived_bracket(random" + args + ")", derived_bracket(r)});
		}
	}
	for (const auto& lm : dot_bracket) {
		all.push_back(lm);
		all.push_back({"depolarize(" + lm.label + ")", depolarize_model(lm.model)});
	}
	FreeZinbiel one(1, 4), two(2, 3);
	std::vector<LabeledModel> zin = {
	    {"freezinbiel(k=1,n=4,der=identity)", one.with_derivation({one.generator(0)})},
	    {"freezinbiel(k=2,n=3,der=shift)", two.with_derivation({two.generator(1), Element{}})},
	    {"freezinbiel(k=2,n=3,der=zero)", two.with_derivation({Element{}, Element{}})},
	};
	for (const auto& lm : zin) {
		all.push_back(lm);
		all.push_back({"zinbiel_star(" + lm.label + ")", zinbiel_star(lm.model)});
	}

	std::vector<LabeledModel> out;
	for (auto& lm : all) {
		bool fits = true;
		for (const auto& o : sig.ops())
			fits = fits && o.arity == 2 && lm.model.has_op(o.name);
		if (fits)
			out.push_back(std::move(lm));
	}
	return out;
}

std::optional<Countermodel> find_countermodel(const Variety& v, const Poly& target, const std::vector<LabeledModel>& pool)
{
	if (target.is_zero())
		return std::nullopt;
	for (const auto& lm : pool) {
		TableAlgebra m = lm.model;
		try {
			if (!check_axioms(m, v).ok)
				continue;
		} catch (const ModelError&) {
			continue;
		}
		if (auto bad = first_violation(m, target))
			return Countermodel{lm.label, std::move(m), std::move(*bad)};
	}
	return std::nullopt;
}

} // namespace gpforge
