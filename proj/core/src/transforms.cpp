#include "gpforge/transforms.hpp"

#include "gpforge/error.hpp"
#include "gpforge/normalize.hpp"

#include <functional>

namespace gpforge {

OperationSignature polarized_signature(const PolarizationMap& map)
{
	return OperationSignature({{map.dot, 2, Symmetry::symmetric}, {map.bracket, 2, Symmetry::antisymmetric}}, {"D"});
}

OperationSignature depolarized_signature(const PolarizationMap& map)
{
	return OperationSignature({{map.star, 2, Symmetry::none}}, {"D"});
}

namespace {

template <typename F>
Poly rewrite(const Poly& p, const OperationSignature& target, F&& binary)
{
	std::function<Poly(const Term&)> go = [&](const Term& t) -> Poly {
		if (t.is_var())
			return Poly(t);
		if (t.children().size() != 2)
			throw SignatureError("operation '" + t.op() + "' cannot be rewritten");
		return binary(t.op(), go(t.child(0)), go(t.child(1)));
	};
	Poly out;
	for (const auto& [t, c] : p)
		out += c * go(t);
	return normalize(out, target);
}

std::string witness(const CheckResult& r)
{
	std::string s = r.failed + " fails at (";
	for (std::size_t i = 0; i < r.tuple.size(); ++i)
		s += (i ? ", e" : "e") + std::to_string(r.tuple[i]);
	return s + "), residual " + to_string(r.residual);
}

void require(TableAlgebra m, const Variety& v, std::string_view what)
{
	auto r = check_axioms(m, v);
	if (!r.ok)
		throw ModelError(std::string(what) + ": input is not a " + v.name() + " algebra: " + witness(r));
}

TableAlgebra zinbiel_star_raw(const TableAlgebra& m)
{
	require(m, builtin("Zinbiel"), "zinbiel_star");
	const std::size_t n = m.dim();
	TableAlgebra out(n);
	out.add_op("star", Symmetry::none);
	const auto& d = m.derivation();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Element v = m.multiply("prod", d[i], basis_element(j));
			axpy(v, -1, m.multiply("prod", basis_element(i), d[j]));
			out.set_product("star", i, j, std::move(v));
		}
	out.set_derivation(m.derivation_name(), d);
	return out;
}

} // namespace

Poly polarize(const Poly& p, const PolarizationMap& map)
{
	auto sig = polarized_signature(map);
	return rewrite(p, sig, [&](const std::string& op, const Poly& a, const Poly& b) {
		if (op != map.star)
			throw SignatureError("polarize: foreign operation '" + op + "'");
		return apply_op(sig, map.dot, a, b) + apply_op(sig, map.bracket, a, b);
	});
}

Poly depolarize(const Poly& p, const PolarizationMap& map)
{
	auto sig = depolarized_signature(map);
	const Rational half(1, 2);
	return rewrite(p, sig, [&](const std::string& op, const Poly& a, const Poly& b) {
		Poly ab = apply_op(sig, map.star, a, b), ba = apply_op(sig, map.star, b, a);
		if (op == map.dot)
			return half * (ab + ba);
		if (op == map.bracket)
			return half * (ab - ba);
		throw SignatureError("depolarize: foreign operation '" + op + "'");
	});
}

Variety polarize(const Variety& v, std::string name, const PolarizationMap& map)
{
	std::vector<Axiom> axioms;
	for (const auto& ax : v.axioms())
		axioms.push_back({ax.name, polarize(ax.poly, map)});
	return Variety(std::move(name), polarized_signature(map), std::move(axioms));
}

Variety depolarize(const Variety& v, std::string name, const PolarizationMap& map)
{
	std::vector<Axiom> axioms;
	for (const auto& ax : v.axioms())
		axioms.push_back({ax.name, depolarize(ax.poly, map)});
	return Variety(std::move(name), depolarized_signature(map), std::move(axioms));
}

TableAlgebra polarize_model(const TableAlgebra& m, const PolarizationMap& map)
{
	const std::size_t n = m.dim();
	TableAlgebra out(n);
	out.add_op(map.dot, Symmetry::symmetric);
	out.add_op(map.bracket, Symmetry::antisymmetric);
	const Rational half(1, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const auto& ab = m.product(map.star, i, j);
			const auto& ba = m.product(map.star, j, i);
			out.set_product(map.dot, i, j, scale(half, add(ab, ba)));
			out.set_product(map.bracket, i, j, scale(half, add(ab, scale(-1, ba))));
		}
	if (m.has_derivation())
		out.set_derivation(m.derivation_name(), m.derivation());
	return out;
}

TableAlgebra depolarize_model(const TableAlgebra& m, const PolarizationMap& map)
{
	const std::size_t n = m.dim();
	TableAlgebra out(n);
	out.add_op(map.star, Symmetry::none);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			out.set_product(map.star, i, j, add(m.product(map.dot, i, j), m.product(map.bracket, i, j)));
	if (m.has_derivation())
		out.set_derivation(m.derivation_name(), m.derivation());
	return out;
}

TableAlgebra derived_bracket(const TableAlgebra& m)
{
	require(m, builtin("CommAssoc"), "derived_bracket");
	const std::size_t n = m.dim();
	TableAlgebra out = m;
	if (out.has_op("br"))
		throw ModelError("derived_bracket: model already has an operation 'br'");
	out.add_op("br", Symmetry::antisymmetric);
	const auto& d = m.derivation();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Element v = m.multiply("mul", d[i], basis_element(j));
			axpy(v, -1, m.multiply("mul", basis_element(i), d[j]));
			out.set_product("br", i, j, std::move(v));
		}
	check_axioms(out, builtin("CommAssoc"));
	check_axioms(out, builtin("GeneralizedPoisson"));
	check_axioms(out, builtin("TransposedPoisson"));
	return out;
}

TableAlgebra zinbiel_star(const TableAlgebra& m)
{
	TableAlgebra out = zinbiel_star_raw(m);
	check_axioms(out, builtin("LeftSymmetric"));
	return out;
}

TableAlgebra zinbiel_polarization(const TableAlgebra& m)
{
	TableAlgebra st = zinbiel_star_raw(m);
	const std::size_t n = m.dim();
	TableAlgebra out(n);
	out.add_op("mul", Symmetry::symmetric);
	out.add_op("br", Symmetry::antisymmetric);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			out.set_product("mul", i, j, add(m.product("prod", i, j), m.product("prod", j, i)));
			out.set_product("br", i, j, add(st.product("star", i, j), scale(-1, st.product("star", j, i))));
		}
	out.set_derivation(m.derivation_name(), m.derivation());
	check_axioms(out, builtin("CommAssoc"));
	check_axioms(out, builtin("GeneralizedPoisson"));
	check_axioms(out, builtin("TransposedPoisson"));
	return out;
}

} // namespace gpforge
