#include "gpforge/signature.hpp"

#include "gpforge/error.hpp"

#include <algorithm>
#include <set>

namespace gpforge {

std::string_view to_string(Symmetry s)
{
	switch (s) {
	case Symmetry::symmetric:
		return "commutative";
	case Symmetry::antisymmetric:
		return "anticommutative";
	case Symmetry::none:
		break;
	}
	return "plain";
}

Symmetry parse_symmetry(std::string_view s)
{
	if (s == "commutative" || s == "symmetric")
		return Symmetry::symmetric;
	if (s == "anticommutative" || s == "antisymmetric")
		return Symmetry::antisymmetric;
	if (s == "plain" || s == "none")
		return Symmetry::none;
	throw SignatureError("unknown symmetry '" + std::string(s) + "'");
}

OperationSignature::OperationSignature(std::vector<Operation> ops, std::vector<std::string> derivations)
    : ops_(std::move(ops)), derivations_(std::move(derivations))
{
	std::set<std::string> names;
	for (const auto& op : ops_) {
		if (op.name.empty() || op.name == "_")
			throw SignatureError("invalid operation name '" + op.name + "'");
		if (op.arity != 1 && op.arity != 2)
			throw SignatureError("operation '" + op.name + "' must have arity 1 or 2");
		if (op.arity == 1 && op.symmetry != Symmetry::none)
			throw SignatureError("unary operation '" + op.name + "' cannot carry a symmetry flag");
		if (!names.insert(op.name).second)
			throw SignatureError("duplicate operation name '" + op.name + "'");
	}
	for (const auto& d : derivations_) {
		if (!names.insert(d).second)
			throw SignatureError("derivation name '" + d + "' clashes with another symbol");
	}
	if (derivations_.size() > 1)
		throw SignatureError("at most one derivation per signature is supported");
}

const Operation* OperationSignature::find_op(std::string_view name) const
{
	auto it = std::find_if(ops_.begin(), ops_.end(), [&](const Operation& o) { return o.name == name; });
	return it == ops_.end() ? nullptr : &*it;
}

bool OperationSignature::is_derivation(std::string_view name) const
{
	return std::find(derivations_.begin(), derivations_.end(), name) != derivations_.end();
}

std::string_view OperationSignature::derivation_name() const
{
	return derivations_.empty() ? std::string_view("D") : std::string_view(derivations_.front());
}

bool OperationSignature::has_binary_op() const
{
	return std::any_of(ops_.begin(), ops_.end(), [](const Operation& o) { return o.arity == 2; });
}

bool OperationSignature::has_unary_op() const
{
	return std::any_of(ops_.begin(), ops_.end(), [](const Operation& o) { return o.arity == 1; });
}

bool OperationSignature::extends(const OperationSignature& other) const
{
	for (const auto& op : other.ops_) {
		const Operation* mine = find_op(op.name);
		if (!mine || !(*mine == op))
			return false;
	}
	return derivations_ == other.derivations_;
}

void OperationSignature::require_binary_op() const
{
	if (!has_binary_op())
		throw SignatureError("signature declares no binary operation");
}

} // namespace gpforge
