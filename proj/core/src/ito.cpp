#include "gpforge/ito.hpp"

#include "gpforge/error.hpp"
#include "gpforge/model_families.hpp"
#include "gpforge/normalize.hpp"
#include "gpforge/transforms.hpp"

namespace gpforge {

namespace {

OperationSignature ito_signature(bool noncommutative)
{
	return OperationSignature(
	    {{"mul", 2, noncommutative ? Symmetry::none : Symmetry::symmetric}, {"br", 2, Symmetry::antisymmetric}},
	    {"D"});
}

bool is_noncommutative(const TableAlgebra& P)
{
	for (const auto& o : P.ops())
		if (o.name == "mul")
			return o.symmetry != Symmetry::symmetric;
	throw ModelError("model has no operation 'mul'");
}

struct Relation {
	std::string name;
	Poly poly;
};

struct Ops {
	OperationSignature sig;
	Poly c1 = var(1), c2 = var(2), c3 = var(3), c4 = var(4);
	Poly mul(const Poly& a, const Poly& b) const { return apply_op(sig, "mul", a, b); }
	Poly br(const Poly& a, const Poly& b) const { return apply_op(sig, "br", a, b); }
	Poly D(const Poly& a) const { return d_apply(a, 1, sig); }
};

std::vector<Relation> tuple_relations(const Ops& o)
{
	const auto &c1 = o.c1, &c2 = o.c2, &c3 = o.c3, &c4 = o.c4;
	return {
	    {"c1c2c3c4", o.mul(o.mul(o.mul(c1, c2), c3), c4)},
	    {"c1[c2,c3]c4", o.mul(o.mul(c1, o.br(c2, c3)), c4)},
	    {"c1c2[c3,c4]", o.mul(o.mul(c1, c2), o.br(c3, c4))},
	    {"[c1,c2]c3c4", o.mul(o.mul(o.br(c1, c2), c3), c4)},
	    {"[c1c2,c3c4]", o.br(o.mul(c1, c2), o.mul(c3, c4))},
	    {"[c1c2c3,c4]", o.br(o.mul(o.mul(c1, c2), c3), c4)},
	    {"[c1c2,[c3,c4]]", o.br(o.mul(c1, c2), o.br(c3, c4))},
	    {"[c1,c2][c3,c4]", o.mul(o.br(c1, c2), o.br(c3, c4))},
	};
}

// Variables: 1 = a1, 2 = b2, 3 = a3, 4 = b4.
std::vector<Relation> split_relations(const Ops& o)
{
	Poly a1 = var(1), b2 = var(2), a3 = var(3), b4 = var(4);
	Poly dbr = o.D(o.br(a3, b4));
	return {
	    {"b2a1D([a3,b4])", o.mul(o.mul(b2, a1), dbr)},
	    {"a1b2D([a3,b4])", o.mul(o.mul(a1, b2), dbr)},
	};
}

std::string op_label(std::string_view op, char side, std::size_t i, std::size_t j)
{
	std::string x = std::string(1, side) + std::to_string(i), y = std::string(1, side) + std::to_string(j);
	return op == "mul" ? x + "*" + y : "[" + x + "," + y + "]";
}

ItoCheck abelian(const TableAlgebra& P, const std::vector<Element>& span, char side)
{
	for (std::size_t i = 0; i < span.size(); ++i)
		for (std::size_t j = 0; j < span.size(); ++j)
			for (const char* op : {"mul", "br"}) {
				Element v = P.multiply(op, span[i], span[j]);
				if (!v.empty())
					return {false, std::string(1, side) + " is not abelian: " + op_label(op, side, i, j) + " != 0",
					        {span[i], span[j]}, v};
			}
	return {};
}

} // namespace

ItoCheck check_hypotheses(const Decomposition& d)
{
	const auto& P = d.P;
	if (auto r = abelian(P, d.A, 'a'); !r.ok)
		return r;
	if (auto r = abelian(P, d.B, 'b'); !r.ok)
		return r;
	std::vector<Element> all = d.A;
	all.insert(all.end(), d.B.begin(), d.B.end());
	std::size_t rank = independent_elements(all, P.dim()).size();
	if (rank != P.dim())
		return {false, "A + B has dimension " + std::to_string(rank) + ", P has " + std::to_string(P.dim()), {}, {}};
	return {};
}

std::vector<RelationVerdict> check_proof_relations(const Decomposition& d)
{
	const auto& P = d.P;
	Ops o{ito_signature(is_noncommutative(P))};
	std::vector<RelationVerdict> out;
	for (auto& rel : tuple_relations(o)) {
		RelationVerdict v{rel.name, true, {}, {}};
		if (auto bad = first_violation(P, rel.poly)) {
			v.ok = false;
			for (auto i : bad->tuple)
				v.witness.push_back(basis_element(i));
			v.value = std::move(bad->value);
		}
		out.push_back(std::move(v));
	}
	for (auto& rel : split_relations(o)) {
		RelationVerdict v{rel.name, true, {}, {}};
		for (const auto& a1 : d.A)
			for (const auto& b2 : d.B)
				for (const auto& a3 : d.A)
					for (const auto& b4 : d.B) {
						if (!v.ok)
							continue;
						Element val = eval_poly(P, rel.poly, {a1, b2, a3, b4});
						if (!val.empty()) {
							v.ok = false;
							v.witness = {a1, b2, a3, b4};
							v.value = std::move(val);
						}
					}
		out.push_back(std::move(v));
	}
	return out;
}

ItoCheck check_metatrivial(const TableAlgebra& P)
{
	const std::size_t n = P.dim();
	std::vector<Element> products;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (const char* op : {"mul", "br"})
				products.push_back(P.product(op, i, j));
	std::vector<Element> q = independent_elements(products, n);
	auto inside = [&](const Element& v) { return in_span(q, v, n); };
	if (P.has_derivation())
		for (const auto& x : q)
			if (Element dx = P.apply_derivation(x); !inside(dx))
				return {false, "P^2 is not D-stable", {x}, dx};
	for (std::size_t i = 0; i < n; ++i)
		for (const auto& x : q) {
			Element e = basis_element(i);
			for (const char* op : {"mul", "br"})
				for (const auto& v : {P.multiply(op, e, x), P.multiply(op, x, e)})
					if (!inside(v))
						return {false, std::string("P^2 is not an ideal for ") + op, {e, x}, v};
		}
	for (const auto& x : q)
		for (const auto& y : q)
			for (const char* op : {"mul", "br"})
				if (Element v = P.multiply(op, x, y); !v.empty())
					return {false, std::string("P^2 is not abelian for ") + op, {x, y}, v};
	return {};
}

std::vector<Decomposition> search_decompositions(const TableAlgebra& P, const SearchOptions& options)
{
	const std::size_t n = P.dim();
	if (n > options.cap)
		throw ResourceError("decomposition search is capped at dimension " + std::to_string(options.cap) + ", model has " +
		                    std::to_string(n));
	std::vector<std::vector<Element>> bases;
	if (options.mode == SearchMode::coordinate) {
		std::vector<Element> e;
		for (std::size_t i = 0; i < n; ++i)
			e.push_back(basis_element(i));
		bases.push_back(std::move(e));
	} else {
		SeededRng rng(options.seed);
		while (static_cast<int>(bases.size()) < options.random_bases) {
			std::vector<Element> cols;
			for (std::size_t i = 0; i < n; ++i) {
				DenseVec v(n, Rational(0));
				for (auto& x : v)
					x = rng.between(-2, 2);
				cols.push_back(to_sparse(v));
			}
			if (independent_elements(cols, n).size() == n)
				bases.push_back(std::move(cols));
		}
	}
	std::vector<Decomposition> out;
	std::size_t total = 1;
	for (std::size_t i = 0; i < n; ++i)
		total *= 3;
	for (const auto& basis : bases)
		for (std::size_t code = 0; code < total; ++code) {
			Decomposition d{P, {}, {}};
			std::size_t c = code;
			for (std::size_t i = 0; i < n; ++i, c /= 3) {
				// 0: A only, 1: B only, 2: both
				if (c % 3 != 1)
					d.A.push_back(basis[i]);
				if (c % 3 != 0)
					d.B.push_back(basis[i]);
			}
			if (check_hypotheses(d).ok)
				out.push_back(std::move(d));
		}
	return out;
}

Variety noncommutative_generalized_poisson()
{
	Ops o{ito_signature(true)};
	Poly x = var(1), y = var(2), z = var(3);
	Poly assoc = o.mul(o.mul(x, y), z) - o.mul(x, o.mul(y, z));
	Poly jacobi = o.br(o.br(x, y), z) + o.br(o.br(y, z), x) + o.br(o.br(z, x), y);
	Poly gp = o.br(o.mul(x, y), z) - o.mul(x, o.br(y, z)) - o.mul(o.br(x, z), y) - o.mul(o.mul(x, y), o.D(z));
	return Variety("GeneralizedPoisson-nc", o.sig, {{"assoc", assoc}, {"jacobi", jacobi}, {"gp", gp}});
}

ItoModelResult run_ito(const std::string& label, const TableAlgebra& P, bool noncommutative,
                       const SearchOptions& options)
{
	ItoModelResult r;
	r.label = label;
	TableAlgebra m = noncommutative ? P.with_op_renamed("mul", "mul", Symmetry::none) : P;
	Variety v = noncommutative ? noncommutative_generalized_poisson() : builtin("GeneralizedPoisson");
	auto cert = check_axioms(m, v);
	r.certified = cert.ok;
	if (!cert.ok) {
		r.violations.push_back("model does not certify as " + v.name() + ": " + cert.failed);
		return r;
	}
	auto meta = check_metatrivial(m);
	r.metatrivial = meta.ok;
	if (!meta.ok && meta.what.rfind("P^2 is not abelian", 0) != 0)
		r.violations.push_back(meta.what);
	auto decs = search_decompositions(m, options);
	r.decompositions = decs.size();
	for (std::size_t k = 0; k < decs.size(); ++k) {
		for (const auto& rel : check_proof_relations(decs[k]))
			if (!rel.ok)
				r.violations.push_back("decomposition " + std::to_string(k) + ": relation " + rel.name + " fails, value " +
				                       to_string(rel.value));
	}
	if (!decs.empty() && !meta.ok)
		r.violations.push_back("decomposable model is not metatrivial: " + meta.what);
	return r;
}

ItoPoolReport run_ito_pool(int count, std::uint64_t seed, bool noncommutative)
{
	ItoPoolReport report;
	report.noncommutative = noncommutative;
	SeededRng rng(seed);
	for (int i = 0; i < count; ++i) {
		std::uint64_t s = rng.next();
		std::size_t dim = 1 + rng.below(4);
		std::string args = "(dim=" + std::to_string(dim) + ",seed=" + std::to_string(s) + ")";
		std::string label;
		TableAlgebra P;
		int kind = static_cast<int>(rng.below(noncommutative ? 4 : 3));
		if (kind == 0) {
			double sparsity = 0.2 + 0.6 * static_cast<double>(rng.below(4)) / 3;
			label = "derived_bracket(random" + args + ")";
			P = derived_bracket(random_commassoc_der(dim, sparsity, s));
		} else if (kind == 1) {
			label = "random_logcanonical" + args;
			P = random_log_canonical(dim, s);
		} else if (kind == 2) {
			label = "zero(" + std::to_string(dim) + ")";
			P = zero_algebra(dim);
		} else {
			label = "random_noncommutative" + args;
			P = random_noncommutative_poisson(dim, s);
		}
		SearchOptions opts;
		opts.seed = s;
		auto r = run_ito(label, P, noncommutative, opts);
		if (P.dim() >= 2) {
			opts.mode = SearchMode::random;
			auto rr = run_ito(label, P, noncommutative, opts);
			r.decompositions += rr.decompositions;
			r.violations.insert(r.violations.end(), rr.violations.begin(), rr.violations.end());
		}
		report.decompositions += r.decompositions;
		report.violations += r.violations.size();
		report.models.push_back(std::move(r));
	}
	return report;
}

} // namespace gpforge
