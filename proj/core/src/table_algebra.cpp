#include "gpforge/table_algebra.hpp"

#include "gpforge/error.hpp"

#include <algorithm>

namespace gpforge {

Element basis_element(std::size_t i)
{
	return {{i, Rational(1)}};
}

void axpy(Element& acc, const Rational& c, const Element& x)
{
	if (c == 0 || x.empty())
		return;
	Element out;
	out.reserve(acc.size() + x.size());
	std::size_t i = 0, j = 0;
	while (i < acc.size() || j < x.size()) {
		if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
			out.push_back(std::move(acc[i++]));
		} else if (i == acc.size() || x[j].first < acc[i].first) {
			out.emplace_back(x[j].first, c * x[j].second);
			++j;
		} else {
			Rational v = acc[i].second + c * x[j].second;
			if (v != 0)
				out.emplace_back(acc[i].first, std::move(v));
			++i;
			++j;
		}
	}
	acc = std::move(out);
}

Element add(const Element& a, const Element& b)
{
	Element out = a;
	axpy(out, 1, b);
	return out;
}

Element scale(const Rational& c, const Element& a)
{
	if (c == 0)
		return {};
	Element out = a;
	for (auto& [i, x] : out)
		x *= c;
	return out;
}

DenseVec to_dense(const Element& e, std::size_t dim)
{
	DenseVec v(dim, Rational(0));
	for (const auto& [i, x] : e)
		v.at(i) = x;
	return v;
}

std::string to_string(const Element& e)
{
	if (e.empty())
		return "0";
	std::string s;
	for (const auto& [i, x] : e) {
		if (!s.empty())
			s += " + ";
		if (x != 1)
			s += to_display_string(x) + "*";
		s += "e" + std::to_string(i);
	}
	return s;
}

void TableAlgebra::add_op(std::string name, Symmetry symmetry)
{
	if (tables_.count(name))
		throw ModelError("model already has operation '" + name + "'");
	ops_.push_back({name, 2, symmetry});
	tables_.emplace(std::move(name), std::vector<Element>(dim_ * dim_));
	certified_.clear();
}

std::vector<Element>& TableAlgebra::table(std::string_view op)
{
	auto it = tables_.find(op);
	if (it == tables_.end())
		throw ModelError("model has no operation '" + std::string(op) + "'");
	return it->second;
}

const std::vector<Element>& TableAlgebra::table(std::string_view op) const
{
	auto it = tables_.find(op);
	if (it == tables_.end())
		throw ModelError("model has no operation '" + std::string(op) + "'");
	return it->second;
}

bool TableAlgebra::has_op(std::string_view name) const
{
	return tables_.find(name) != tables_.end();
}

void TableAlgebra::set_product(std::string_view op, std::size_t i, std::size_t j, Element value)
{
	if (i >= dim_ || j >= dim_)
		throw ModelError("basis index out of range");
	for (const auto& [k, x] : value)
		if (k >= dim_)
			throw ModelError("product coordinate out of range");
	table(op)[i * dim_ + j] = std::move(value);
	certified_.clear();
}

const Element& TableAlgebra::product(std::string_view op, std::size_t i, std::size_t j) const
{
	return table(op)[i * dim_ + j];
}

Element TableAlgebra::multiply(std::string_view op, const Element& a, const Element& b) const
{
	const auto& t = table(op);
	if (a.size() == 1 && b.size() == 1)
		return scale(a[0].second * b[0].second, t[a[0].first * dim_ + b[0].first]);
	DenseVec acc(dim_, Rational(0));
	bool any = false;
	for (const auto& [i, x] : a)
		for (const auto& [j, y] : b) {
			const auto& e = t[i * dim_ + j];
			if (e.empty())
				continue;
			any = true;
			Rational xy = x * y;
			for (const auto& [k, z] : e)
				acc[k] += xy * z;
		}
	return any ? to_sparse(acc) : Element{};
}

void TableAlgebra::set_derivation(std::string name, std::vector<Element> images)
{
	if (images.size() != dim_)
		throw ModelError("derivation needs one image per basis vector");
	for (const auto& e : images)
		for (const auto& [k, x] : e)
			if (k >= dim_)
				throw ModelError("derivation coordinate out of range");
	derivation_name_ = std::move(name);
	derivation_ = std::move(images);
	certified_.clear();
}

Element TableAlgebra::apply_derivation(const Element& a, int times) const
{
	if (!has_derivation())
		throw ModelError("model has no derivation");
	Element cur = a;
	for (int t = 0; t < times && !cur.empty(); ++t) {
		Element next;
		for (const auto& [i, x] : cur)
			axpy(next, x, derivation_[i]);
		cur = std::move(next);
	}
	return cur;
}

OperationSignature TableAlgebra::signature() const
{
	std::vector<std::string> ders;
	if (has_derivation())
		ders.push_back(derivation_name_);
	return OperationSignature(ops_, ders);
}

TableAlgebra TableAlgebra::with_op_renamed(std::string_view from, std::string to, Symmetry symmetry) const
{
	TableAlgebra out(dim_);
	for (const auto& o : ops_) {
		bool hit = o.name == from;
		out.add_op(hit ? to : o.name, hit ? symmetry : o.symmetry);
		out.table(hit ? std::string_view(to) : std::string_view(o.name)) = table(o.name);
	}
	if (has_derivation())
		out.set_derivation(derivation_name_, derivation_);
	return out;
}

std::optional<std::string> TableAlgebra::validate() const
{
	for (const auto& o : ops_) {
		if (o.symmetry == Symmetry::none)
			continue;
		const auto& t = table(o.name);
		for (std::size_t i = 0; i < dim_; ++i)
			for (std::size_t j = i; j < dim_; ++j) {
				const auto& a = t[i * dim_ + j];
				const auto& b = t[j * dim_ + i];
				bool ok = o.symmetry == Symmetry::symmetric ? a == b : (a == scale(-1, b) && (i != j || a.empty()));
				if (!ok)
					return "operation '" + o.name + "' breaks its " + std::string(to_string(o.symmetry)) +
					       " flag at (e" + std::to_string(i) + ", e" + std::to_string(j) + ")";
			}
	}
	return std::nullopt;
}

namespace {

Element eval_term(const TableAlgebra& m, const Term& t, const std::vector<Element>& assignment)
{
	if (t.is_var()) {
		int v = t.var_index();
		if (v < 1 || static_cast<std::size_t>(v) > assignment.size())
			throw ModelError("no value assigned to variable " + var_name(v));
		const Element& e = assignment[v - 1];
		return t.dpow() == 0 ? e : m.apply_derivation(e, t.dpow());
	}
	if (t.children().size() != 2)
		throw ModelError("table models only support binary operations");
	Element l = eval_term(m, t.child(0), assignment);
	if (l.empty())
		return l;
	Element r = eval_term(m, t.child(1), assignment);
	if (r.empty())
		return r;
	return m.multiply(t.op(), l, r);
}

// Calls f on every tuple in {0..dim-1}^len in lexicographic order until it returns false.
template <typename F>
bool for_each_tuple(std::size_t dim, std::size_t len, F&& f)
{
	std::vector<std::size_t> tuple(len, 0);
	if (dim == 0 && len > 0)
		return true;
	while (true) {
		if (!f(tuple))
			return false;
		std::size_t k = len;
		while (k > 0 && ++tuple[k - 1] == dim) {
			tuple[k - 1] = 0;
			--k;
		}
		if (k == 0)
			return true;
	}
}

std::vector<Element> basis_assignment(const std::vector<std::size_t>& tuple)
{
	std::vector<Element> a;
	a.reserve(tuple.size());
	for (auto i : tuple)
		a.push_back(basis_element(i));
	return a;
}

} // namespace

Element eval_poly(const TableAlgebra& m, const Poly& p, const std::vector<Element>& assignment)
{
	Element out;
	for (const auto& [t, c] : p)
		axpy(out, c, eval_term(m, t, assignment));
	return out;
}

Element eval_identity(const TableAlgebra& m, const Poly& p, const std::vector<std::size_t>& tuple)
{
	for (auto i : tuple)
		if (i >= m.dim())
			throw ModelError("basis index out of range");
	return eval_poly(m, p, basis_assignment(tuple));
}

std::optional<Violation> first_violation(const TableAlgebra& m, const Poly& p)
{
	if (p.is_zero())
		return std::nullopt;
	std::optional<Violation> found;
	for_each_tuple(m.dim(), static_cast<std::size_t>(p.max_var()), [&](const std::vector<std::size_t>& t) {
		Element v = eval_identity(m, p, t);
		if (v.empty())
			return true;
		found = Violation{t, std::move(v)};
		return false;
	});
	return found;
}

std::vector<LeibnizDefect> leibniz_defects(const TableAlgebra& m, std::string_view op)
{
	std::vector<LeibnizDefect> out;
	const std::size_t n = m.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Element d = m.apply_derivation(m.product(op, i, j));
			axpy(d, -1, m.multiply(op, m.derivation()[i], basis_element(j)));
			axpy(d, -1, m.multiply(op, basis_element(i), m.derivation()[j]));
			if (!d.empty())
				out.push_back({i, j, std::move(d)});
		}
	return out;
}

CheckResult check_axioms(TableAlgebra& m, const Variety& v)
{
	const auto& sig = v.signature();
	for (const auto& o : sig.ops()) {
		if (o.arity != 2)
			throw ModelError("table models only support binary operations, '" + o.name + "' is unary");
		if (!m.has_op(o.name))
			throw ModelError("model has no operation '" + o.name + "' required by " + v.name());
	}
	if (sig.has_derivation() && !m.has_derivation())
		throw ModelError("model has no derivation, required by " + v.name());
	if (auto bad = m.validate())
		throw ModelError(*bad);

	CheckResult r;
	const std::size_t n = m.dim();
	for (const auto& o : sig.ops()) {
		if (o.symmetry == Symmetry::none)
			continue;
		Rational s = o.symmetry == Symmetry::symmetric ? -1 : 1;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i; j < n; ++j) {
				Element d = m.product(o.name, i, j);
				axpy(d, s, m.product(o.name, j, i));
				if (o.symmetry == Symmetry::antisymmetric && i == j)
					d = m.product(o.name, i, i);
				if (!d.empty()) {
					r.ok = false;
					r.failed = "symmetry:" + o.name;
					r.tuple = {i, j};
					r.residual = std::move(d);
					return r;
				}
			}
	}
	if (sig.has_derivation()) {
		for (const auto& o : sig.ops()) {
			auto defects = leibniz_defects(m, o.name);
			if (!defects.empty()) {
				r.ok = false;
				r.failed = "leibniz:" + o.name;
				r.tuple = {defects.front().i, defects.front().j};
				r.residual = std::move(defects.front().defect);
				return r;
			}
		}
	}
	for (const auto& ax : v.axioms()) {
		if (auto bad = first_violation(m, ax.poly)) {
			r.ok = false;
			r.failed = ax.name;
			r.tuple = std::move(bad->tuple);
			r.residual = std::move(bad->value);
			return r;
		}
	}
	m.certified_.insert(v.name());
	return r;
}

std::vector<Element> independent_elements(const std::vector<Element>& v, std::size_t dim)
{
	std::vector<Element> out;
	IncrementalEchelon ech(dim);
	for (std::size_t i = 0; i < v.size(); ++i)
		if (ech.add(v[i], i))
			out.push_back(v[i]);
	return out;
}

bool in_span(const std::vector<Element>& basis, const Element& v, std::size_t dim)
{
	if (v.empty())
		return true;
	IncrementalEchelon ech(dim);
	for (std::size_t i = 0; i < basis.size(); ++i)
		ech.add(basis[i], i);
	return ech.in_span(v);
}

} // namespace gpforge
