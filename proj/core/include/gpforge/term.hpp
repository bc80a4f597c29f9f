#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpforge {

/// Variable index reserved for the hole of a one-hole context.
inline constexpr int hole_index = 0;

/**
 * Immutable tree over an operation alphabet. A leaf is a variable x_i with a
 * derivation count (dpow); an inner node applies a named operation.
 *
 * Raw trees may contain derivation symbols as inner nodes; normal forms (as
 * produced by normalize()) carry derivations on leaves only and have the
 * children of symmetric/antisymmetric operations sorted.
 *
 * Ordering is recursive lexicographic on (kind, variable, dpow, op, children)
 * with leaves before inner nodes.
 */
class Term {
public:
	static Term var(int index, int dpow = 0);
	static Term hole() { return var(hole_index); }
	static Term apply(std::string op, std::vector<Term> children);

	bool is_var() const { return node_->is_var; }
	bool is_hole() const { return node_->is_var && node_->var == hole_index; }
	int var_index() const { return node_->var; }
	int dpow() const { return node_->dpow; }
	const std::string& op() const { return node_->op; }
	std::span<const Term> children() const { return node_->children; }
	const Term& child(std::size_t i) const { return node_->children[i]; }

	/// Number of leaves.
	int degree() const { return node_->degree; }
	/// Total dpow over leaves.
	int weight() const { return node_->weight; }
	std::size_t hash() const { return node_->hash; }

	/// Leaf variable indices in left-to-right order (with repetitions).
	std::vector<int> leaves() const;
	/// True when no variable index occurs twice.
	bool is_multilinear() const;
	bool contains_hole() const;

	/// Same shape with dpow of leaf `var` raised by `by`.
	Term with_extra_dpow(int var, int by) const;

	friend std::strong_ordering operator<=>(const Term& a, const Term& b);
	friend bool operator==(const Term& a, const Term& b);

private:
	struct Node {
		bool is_var = true;
		int var = 0;
		int dpow = 0;
		std::string op;
		std::vector<Term> children;
		int degree = 1;
		int weight = 0;
		std::size_t hash = 0;
	};
	explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
	std::shared_ptr<const Node> node_;
};

/// Display name of variable index i: "_" for the hole, a..z for 1..26, x<i> beyond.
std::string var_name(int index);
/// Inverse of var_name(); returns -1 for names outside that scheme.
int canonical_var_index(std::string_view name);

/// Prefix rendering, e.g. "mul(a,br(b,D(c)))".
std::string to_string(const Term& t, std::string_view derivation = "D");

struct TermHash {
	std::size_t operator()(const Term& t) const { return t.hash(); }
};

} // namespace gpforge
