#include "gpforge/variety.hpp"

#include "gpforge/error.hpp"
#include "gpforge/normalize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gpforge {

namespace {

// Rebuilds t with its leaves replaced, in left-to-right order, by `vars`.
Term relabel_leaves(const Term& t, const std::vector<int>& vars, std::size_t& pos)
{
	if (t.is_var())
		return Term::var(vars[pos++], t.dpow());
	std::vector<Term> kids;
	for (const auto& c : t.children())
		kids.push_back(relabel_leaves(c, vars, pos));
	return Term::apply(t.op(), std::move(kids));
}

Poly linearize_component(const Poly& p, const OperationSignature& sig)
{
	// Fresh, consecutive indices per original variable in increasing order.
	std::map<int, int> multiplicity;
	{
		auto leaves = p.begin()->first.leaves();
		for (int v : leaves)
			++multiplicity[v];
	}
	std::map<int, std::vector<int>> fresh;
	int next = 1;
	for (auto [v, m] : multiplicity)
		for (int k = 0; k < m; ++k)
			fresh[v].push_back(next++);

	Poly out;
	for (const auto& [t, c] : p) {
		auto leaves = t.leaves();
		// Occurrence positions of every variable.
		std::map<int, std::vector<std::size_t>> where;
		for (std::size_t i = 0; i < leaves.size(); ++i)
			where[leaves[i]].push_back(i);
		std::vector<int> vars(leaves.size());
		std::map<int, std::vector<int>> perm = fresh;
		std::function<void(std::map<int, std::vector<int>>::iterator)> rec =
		    [&](std::map<int, std::vector<int>>::iterator it) {
			    if (it == perm.end()) {
				    std::size_t pos = 0;
				    out += c * normalize(relabel_leaves(t, vars, pos), sig);
				    return;
			    }
			    auto& choice = it->second;
			    std::sort(choice.begin(), choice.end());
			    do {
				    const auto& slots = where[it->first];
				    for (std::size_t k = 0; k < slots.size(); ++k)
					    vars[slots[k]] = choice[k];
				    rec(std::next(it));
			    } while (std::next_permutation(choice.begin(), choice.end()));
		    };
		rec(perm.begin());
	}
	return out;
}

std::vector<Axiom> canonical_axioms(const OperationSignature& sig, std::vector<Axiom> axioms)
{
	std::vector<Axiom> out;
	std::set<std::string> names;
	for (auto& ax : axioms) {
		Poly canon = normalize(ax.poly, sig);
		auto parts = multilinearize(canon, sig);
		if (parts.empty())
			parts.push_back(Poly());
		for (std::size_t k = 0; k < parts.size(); ++k) {
			std::string name = parts.size() == 1 ? ax.name : ax.name + "#" + std::to_string(k + 1);
			if (!names.insert(name).second)
				throw Error("duplicate axiom name '" + name + "'");
			out.push_back({name, std::move(parts[k])});
		}
	}
	return out;
}

} // namespace

Variety::Variety(std::string name, OperationSignature sig, std::vector<Axiom> axioms)
    : name_(std::move(name)), sig_(std::move(sig))
{
	if (!axioms.empty())
		sig_.require_binary_op();
	axioms_ = canonical_axioms(sig_, std::move(axioms));
}

const Axiom* Variety::find_axiom(std::string_view name) const
{
	auto it = std::find_if(axioms_.begin(), axioms_.end(), [&](const Axiom& a) { return a.name == name; });
	return it == axioms_.end() ? nullptr : &*it;
}

std::vector<Poly> multilinearize(const Poly& p, const OperationSignature& sig)
{
	std::map<std::vector<int>, Poly> components;
	for (const auto& [t, c] : p) {
		auto leaves = t.leaves();
		std::sort(leaves.begin(), leaves.end());
		components[leaves].add_term(t, c);
	}
	std::vector<Poly> out;
	for (auto& [leaves, comp] : components) {
		if (comp.is_zero())
			continue;
		Poly lin;
		if (std::adjacent_find(leaves.begin(), leaves.end()) == leaves.end()) {
			std::map<int, int> compact;
			for (std::size_t i = 0; i < leaves.size(); ++i)
				compact[leaves[i]] = static_cast<int>(i) + 1;
			lin = rename_variables(comp, compact, sig);
		} else {
			lin = linearize_component(comp, sig);
		}
		if (!lin.is_zero())
			out.push_back(std::move(lin));
	}
	return out;
}

Variety drop_derivation_terms(const Variety& v, std::string new_name)
{
	std::vector<Axiom> axioms;
	for (const auto& ax : v.axioms())
		axioms.push_back({ax.name, drop_derivation_monomials(ax.poly)});
	return Variety(std::move(new_name), v.signature(), std::move(axioms));
}

Variety combine(std::string name, const Variety& a, const Variety& b)
{
	if (!(a.signature() == b.signature()))
		throw SignatureError("cannot combine varieties over different signatures");
	std::vector<Axiom> axioms = a.axioms();
	for (const auto& ax : b.axioms())
		if (!a.find_axiom(ax.name))
			axioms.push_back(ax);
	return Variety(std::move(name), a.signature(), std::move(axioms));
}

namespace sigs {

OperationSignature commutative()
{
	return OperationSignature({{"mul", 2, Symmetry::symmetric}}, {"D"});
}

OperationSignature lie()
{
	return OperationSignature({{"br", 2, Symmetry::antisymmetric}}, {"D"});
}

OperationSignature dot_bracket()
{
	return OperationSignature({{"mul", 2, Symmetry::symmetric}, {"br", 2, Symmetry::antisymmetric}}, {"D"});
}

OperationSignature star()
{
	return OperationSignature({{"star", 2, Symmetry::none}}, {"D"});
}

OperationSignature zinbiel()
{
	return OperationSignature({{"prod", 2, Symmetry::none}}, {"D"});
}

} // namespace sigs

namespace identities {

namespace {

const Poly x = var(1), y = var(2), z = var(3);

struct DotBracket {
	OperationSignature sig = sigs::dot_bracket();
	Poly mul(const Poly& a, const Poly& b) const { return apply_op(sig, "mul", a, b); }
	Poly br(const Poly& a, const Poly& b) const { return apply_op(sig, "br", a, b); }
	Poly D(const Poly& a) const { return d_apply(a, 1, sig); }
};

struct Star {
	OperationSignature sig = sigs::star();
	Poly st(const Poly& a, const Poly& b) const { return apply_op(sig, "star", a, b); }
	// Symmetrized product.
	Poly dot(const Poly& a, const Poly& b) const { return Rational(1, 2) * (st(a, b) + st(b, a)); }
	Poly D(const Poly& a) const { return d_apply(a, 1, sig); }
	Poly assoc(const Poly& a, const Poly& b, const Poly& c) const { return st(st(a, b), c) - st(a, st(b, c)); }
};

} // namespace

Poly associator()
{
	DotBracket o;
	return o.mul(o.mul(x, y), z) - o.mul(x, o.mul(y, z));
}

Poly jacobi()
{
	DotBracket o;
	return o.br(o.br(x, y), z) + o.br(o.br(y, z), x) + o.br(o.br(z, x), y);
}

Poly leibniz()
{
	DotBracket o;
	return o.br(o.mul(x, y), z) - o.mul(x, o.br(y, z)) - o.mul(o.br(x, z), y);
}

Poly generalized_leibniz()
{
	DotBracket o;
	return leibniz() - o.mul(o.mul(x, y), o.D(z));
}

Poly transposed_leibniz()
{
	DotBracket o;
	return Rational(2) * o.mul(x, o.br(y, z)) - o.br(o.mul(x, y), z) - o.br(y, o.mul(x, z));
}

Poly int1()
{
	DotBracket o;
	return o.mul(x, o.br(y, z)) - o.mul(o.mul(x, z), o.D(y)) + o.mul(o.mul(x, y), o.D(z));
}

Poly int2()
{
	DotBracket o;
	return o.br(o.mul(x, y), z) - o.mul(o.mul(y, z), o.D(x)) - o.mul(o.mul(x, z), o.D(y)) +
	       o.mul(o.mul(x, y), o.D(z));
}

Poly dot_kills_bracket()
{
	DotBracket o;
	return o.mul(x, o.br(y, z));
}

Poly bracket_kills_dot()
{
	DotBracket o;
	return o.br(o.mul(x, y), z);
}

Poly zinbiel()
{
	auto sig = sigs::zinbiel();
	auto p = [&](const Poly& a, const Poly& b) { return apply_op(sig, "prod", a, b); };
	return p(p(x, y) + p(y, x), z) - p(x, p(y, z));
}

Poly left_symmetric()
{
	Star o;
	return o.st(o.st(x, y), z) - o.st(x, o.st(y, z)) - o.st(o.st(y, x), z) + o.st(y, o.st(x, z));
}

Poly psi()
{
	Star o;
	return Rational(-3) * o.assoc(x, y, z) + o.st(o.st(x, z), y) + o.st(o.st(y, z), x) - o.st(o.st(y, x), z) -
	       o.st(o.st(z, x), y) + Rational(4) * o.dot(o.dot(x, y), o.D(z)) +
	       Rational(2) * o.dot(o.D(x), o.dot(y, z));
}

Poly f()
{
	Star o;
	return o.st(x, o.st(y, z)) - o.st(o.st(z, y), x) - Rational(2) * o.dot(o.dot(y, z), o.D(x)) +
	       Rational(4) * o.dot(o.dot(x, y), o.D(z));
}

Poly g()
{
	Star o;
	return o.assoc(x, y, z) - Rational(1, 2) * o.st(o.st(x, z), y) + Rational(1, 2) * o.st(o.st(z, x), y) -
	       Rational(2) * o.dot(o.dot(x, y), o.D(z));
}

Poly reverse_associative()
{
	Star o;
	return o.st(x, o.st(y, z)) - o.st(o.st(z, y), x);
}

Poly reverse_companion()
{
	Star o;
	return o.assoc(x, y, z) - Rational(1, 2) * o.st(o.st(x, z), y) + Rational(1, 2) * o.st(o.st(z, x), y);
}

} // namespace identities

const std::vector<std::string>& builtin_names()
{
	static const std::vector<std::string> names = {
	    "CommAssoc",    "Lie",       "Poisson",   "TransposedPoisson", "GeneralizedPoisson",
	    "GP-meet-TP",   "GP-and-TP", "Zinbiel",   "LeftSymmetric",     "GPStar",
	    "GPTPStar",     "ReverseAssociative",     "PTPStar",           "Poisson-and-TP",
	};
	return names;
}

Variety builtin(std::string_view name)
{
	using namespace identities;
	const Axiom assoc{"assoc", associator()};
	const Axiom jac{"jacobi", jacobi()};
	auto db = sigs::dot_bracket();
	if (name == "CommAssoc")
		return Variety("CommAssoc", sigs::commutative(), {assoc});
	if (name == "Lie")
		return Variety("Lie", sigs::lie(), {jac});
	if (name == "Poisson")
		return Variety("Poisson", db, {assoc, jac, {"leibniz", leibniz()}});
	if (name == "TransposedPoisson")
		return Variety("TransposedPoisson", db, {assoc, jac, {"tp", transposed_leibniz()}});
	if (name == "GeneralizedPoisson")
		return Variety("GeneralizedPoisson", db, {assoc, jac, {"gp", generalized_leibniz()}});
	if (name == "GP-meet-TP")
		return Variety("GP-meet-TP", db,
		               {assoc, jac, {"gp", generalized_leibniz()}, {"tp", transposed_leibniz()}});
	if (name == "GP-and-TP")
		return Variety("GP-and-TP", db, {assoc, jac, {"int1", int1()}, {"int2", int2()}});
	if (name == "Zinbiel")
		return Variety("Zinbiel", sigs::zinbiel(), {{"zin", identities::zinbiel()}});
	if (name == "LeftSymmetric")
		return Variety("LeftSymmetric", sigs::star(), {{"lsym", left_symmetric()}});
	if (name == "GPStar")
		return Variety("GPStar", sigs::star(), {{"psi", psi()}});
	if (name == "GPTPStar")
		return Variety("GPTPStar", sigs::star(), {{"f", f()}, {"g", g()}});
	if (name == "ReverseAssociative")
		return Variety("ReverseAssociative", sigs::star(), {{"revassoc", reverse_associative()}});
	if (name == "PTPStar")
		return Variety("PTPStar", sigs::star(),
		               {{"revassoc", reverse_associative()}, {"companion", reverse_companion()}});
	if (name == "Poisson-and-TP")
		return Variety("Poisson-and-TP", db,
		               {assoc, jac, {"dotbr", dot_kills_bracket()}, {"brdot", bracket_kills_dot()}});
	throw Error("unknown built-in variety '" + std::string(name) + "'");
}

} // namespace gpforge
