#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpforge {

enum class Symmetry { none, symmetric, antisymmetric };

std::string_view to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view s);

struct Operation {
	std::string name;
	int arity = 2;
	Symmetry symmetry = Symmetry::none;

	friend bool operator==(const Operation&, const Operation&) = default;
};

/**
 * The operation alphabet of a free differential algebra: named unary/binary
 * operations and at most one derivation, which acts by the Leibniz rule on
 * every binary operation and commutes with unary ones.
 *
 * Terms carry their derivation count on leaves only, so a second derivation
 * symbol cannot be represented and is rejected.
 */
class OperationSignature {
public:
	OperationSignature() = default;
	OperationSignature(std::vector<Operation> ops, std::vector<std::string> derivations);

	const std::vector<Operation>& ops() const { return ops_; }
	const std::vector<std::string>& derivations() const { return derivations_; }

	const Operation* find_op(std::string_view name) const;
	bool is_derivation(std::string_view name) const;
	bool has_derivation() const { return !derivations_.empty(); }
	/// Name of the derivation, "D" when the signature declares none.
	std::string_view derivation_name() const;
	bool has_binary_op() const;
	bool has_unary_op() const;

	/// Every op of `other` is present here with the same arity and symmetry,
	/// and the derivation lists agree.
	bool extends(const OperationSignature& other) const;

	/// Throws SignatureError unless at least one binary op is declared.
	void require_binary_op() const;

	friend bool operator==(const OperationSignature&, const OperationSignature&) = default;

private:
	std::vector<Operation> ops_;
	std::vector<std::string> derivations_;
};

} // namespace gpforge
