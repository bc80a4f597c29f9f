#include "gpforge/normalize.hpp"

#include "gpforge/error.hpp"

namespace gpforge {

namespace {

const Operation& lookup(const OperationSignature& sig, std::string_view op, std::size_t arity)
{
	const Operation* o = sig.find_op(op);
	if (!o)
		throw SignatureError("unknown operation '" + std::string(op) + "'");
	if (static_cast<std::size_t>(o->arity) != arity)
		throw SignatureError("operation '" + std::string(op) + "' expects " + std::to_string(o->arity) +
		                     " argument(s), got " + std::to_string(arity));
	return *o;
}

// op(l, r) for normal-form children; returns false when the result is zero.
bool make_binary(const Operation& op, const Term& l, const Term& r, Term& out, int& sign)
{
	sign = 1;
	switch (op.symmetry) {
	case Symmetry::none:
		out = Term::apply(op.name, {l, r});
		return true;
	case Symmetry::symmetric:
		out = (r < l) ? Term::apply(op.name, {r, l}) : Term::apply(op.name, {l, r});
		return true;
	case Symmetry::antisymmetric: {
		auto c = l <=> r;
		if (c == 0)
			return false;
		if (c > 0) {
			sign = -1;
			out = Term::apply(op.name, {r, l});
		} else {
			out = Term::apply(op.name, {l, r});
		}
		return true;
	}
	}
	return false;
}

Poly d_term(const Term& t, const OperationSignature& sig)
{
	if (t.is_var())
		return Poly(Term::var(t.var_index(), t.dpow() + 1));
	auto kids = t.children();
	if (kids.size() == 1)
		return apply_op(sig, t.op(), d_term(kids[0], sig));
	Poly l(kids[0]), r(kids[1]);
	return apply_op(sig, t.op(), d_term(kids[0], sig), r) + apply_op(sig, t.op(), l, d_term(kids[1], sig));
}

Poly substitute_term(const Term& t, const std::map<int, Poly>& sigma, const OperationSignature& sig)
{
	if (t.is_var()) {
		auto it = sigma.find(t.var_index());
		if (it == sigma.end())
			throw Error("substitution has no image for variable " + var_name(t.var_index()));
		return t.dpow() == 0 ? it->second : d_apply(it->second, t.dpow(), sig);
	}
	std::vector<Poly> args;
	args.reserve(t.children().size());
	for (const auto& c : t.children())
		args.push_back(substitute_term(c, sigma, sig));
	return apply_op(sig, t.op(), args);
}

} // namespace

Poly apply_op(const OperationSignature& sig, std::string_view op, std::span<const Poly> args)
{
	const Operation& o = lookup(sig, op, args.size());
	Poly out;
	if (o.arity == 1) {
		for (const auto& [t, c] : args[0])
			out.add_term(Term::apply(o.name, {t}), c);
		return out;
	}
	Term prod = Term::var(0);
	int sign = 1;
	for (const auto& [tl, cl] : args[0]) {
		for (const auto& [tr, cr] : args[1]) {
			if (!make_binary(o, tl, tr, prod, sign))
				continue;
			out.add_term(prod, sign * cl * cr);
		}
	}
	return out;
}

Poly apply_op(const OperationSignature& sig, std::string_view op, const Poly& a, const Poly& b)
{
	const Poly args[2] = {a, b};
	return apply_op(sig, op, std::span<const Poly>(args, 2));
}

Poly apply_op(const OperationSignature& sig, std::string_view op, const Poly& a)
{
	return apply_op(sig, op, std::span<const Poly>(&a, 1));
}

Poly d_apply(const Poly& p, int k, const OperationSignature& sig)
{
	Poly cur = p;
	for (int i = 0; i < k; ++i) {
		Poly next;
		for (const auto& [t, c] : cur) {
			Poly dt = d_term(t, sig);
			next += c * dt;
		}
		cur = std::move(next);
	}
	return cur;
}

Poly normalize(const Term& raw, const OperationSignature& sig)
{
	if (raw.is_var())
		return Poly(raw);
	if (sig.is_derivation(raw.op())) {
		if (raw.children().size() != 1)
			throw SignatureError("derivation '" + raw.op() + "' takes exactly one argument");
		return d_apply(normalize(raw.child(0), sig), 1, sig);
	}
	std::vector<Poly> args;
	for (const auto& c : raw.children())
		args.push_back(normalize(c, sig));
	return apply_op(sig, raw.op(), args);
}

Poly normalize(const Poly& p, const OperationSignature& sig)
{
	Poly out;
	for (const auto& [t, c] : p)
		out += c * normalize(t, sig);
	return out;
}

Poly substitute(const Poly& p, const std::map<int, Poly>& sigma, const OperationSignature& sig)
{
	Poly out;
	for (const auto& [t, c] : p)
		out += c * substitute_term(t, sigma, sig);
	return out;
}

Poly rename_variables(const Poly& p, const std::map<int, int>& rename, const OperationSignature& sig)
{
	std::map<int, Poly> sigma;
	for (const auto& [t, c] : p)
		for (int v : t.leaves()) {
			auto it = rename.find(v);
			sigma.try_emplace(v, Poly(Term::var(it == rename.end() ? v : it->second)));
		}
	return substitute(p, sigma, sig);
}

Poly drop_derivation_monomials(const Poly& p)
{
	Poly out;
	for (const auto& [t, c] : p)
		if (t.weight() == 0)
			out.add_term(t, c);
	return out;
}

} // namespace gpforge
