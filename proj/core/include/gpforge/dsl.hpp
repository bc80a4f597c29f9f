#pragma once

#include "gpforge/poly.hpp"
#include "gpforge/rational.hpp"
#include "gpforge/signature.hpp"
#include "gpforge/variety.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gpforge {

struct SourcePos {
	int line = 0;
	int column = 0;
};

/**
 * Expression syntax tree. A sum holds (coefficient, summand) pairs and is
 * zero when empty; a call is `name(args...)`; a name is a variable (or, in
 * a macro body, a parameter); the hole is `_`.
 *
 * Equality ignores source positions.
 */
struct Expr {
	enum class Kind { sum, call, name, hole };
	Kind kind = Kind::sum;
	std::string name;
	std::vector<Expr> args;       // call arguments, or summands of a sum
	std::vector<Rational> coeffs; // sum only, parallel to args
	SourcePos pos;

	friend bool operator==(const Expr& a, const Expr& b);
};

struct VarietyRef {
	bool builtin = false; // `"Name"` refers to a built-in variety
	std::string name;
	SourcePos pos;

	friend bool operator==(const VarietyRef& a, const VarietyRef& b) { return a.builtin == b.builtin && a.name == b.name; }
};

struct OpDecl {
	std::string name;
	int arity = 2;
	Symmetry symmetry = Symmetry::none;

	friend bool operator==(const OpDecl&, const OpDecl&) = default;
};

struct AxiomDecl {
	std::string name;
	Expr lhs;
	Expr rhs;

	friend bool operator==(const AxiomDecl&, const AxiomDecl&) = default;
};

/// `variety N { ... }` or `variety N = builtin "X"` / `= polarize R` /
/// `= depolarize R` / `= drop_derivations R`.
struct VarietyDecl {
	std::string name;
	std::string source; // "", "builtin", "polarize", "depolarize", "drop_derivations"
	std::optional<VarietyRef> from;
	std::vector<VarietyRef> includes;
	std::vector<OpDecl> ops;
	std::vector<std::string> derivations;
	std::vector<AxiomDecl> axioms;

	friend bool operator==(const VarietyDecl&, const VarietyDecl&) = default;
};

/// `poly N(x, y, z) = EXPR;` macro.
struct PolyDecl {
	std::string name;
	std::vector<std::string> params;
	Expr body;

	friend bool operator==(const PolyDecl&, const PolyDecl&) = default;
};

struct ModelArg {
	enum class Kind { number, ident, string };
	std::string key; // empty for positional
	Kind kind = Kind::number;
	Rational number;
	std::string text;

	friend bool operator==(const ModelArg&, const ModelArg&) = default;
};

/// `model N = kind(args);`
struct ModelDecl {
	std::string name;
	std::string kind;
	std::vector<ModelArg> args;

	friend bool operator==(const ModelDecl&, const ModelDecl&) = default;
};

/// `part [c] axiom(args) [in CONTEXT] [dshift k];`
struct PartDecl {
	Rational coeff = 1;
	std::string axiom;
	std::vector<Expr> args;
	std::optional<Expr> context;
	int dshift = 0;

	friend bool operator==(const PartDecl&, const PartDecl&) = default;
};

struct QueryDecl {
	std::string kind; // verify cert derive implies equivalent model-check countermodel polarize depolarize ito ito-pool
	std::vector<VarietyRef> varieties;
	std::string model;
	std::optional<Expr> target;
	std::vector<PartDecl> parts;
	std::string path;
	int count = 0;
	std::map<std::string, int> options; // degree, dweight

	friend bool operator==(const QueryDecl&, const QueryDecl&) = default;
};

struct Statement {
	std::variant<VarietyDecl, PolyDecl, ModelDecl, QueryDecl> node;
	SourcePos pos;

	friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct Script {
	std::vector<Statement> statements;

	friend bool operator==(const Script&, const Script&) = default;
};

/// Throws ParseError with line and column.
Script parse_script(std::string_view text);
Expr parse_expr(std::string_view text);

std::string print_expr(const Expr& e);
std::string print_statement(const Statement& s);
std::string print_script(const Script& s);

using MacroTable = std::map<std::string, PolyDecl, std::less<>>;

/// How variable names map to indices.
struct VariableMap {
	std::map<std::string, int, std::less<>> index;
	/// Names in shortlex order (length, then text) get 1, 2, 3, ...
	static VariableMap scoped(const std::vector<const Expr*>& exprs, const OperationSignature& sig,
	                          const MacroTable& macros = {});
};

/// Evaluates over `sig`: op calls normalize, the derivation name applies D,
/// macro calls expand syntactically. With `vars == nullptr` names use the
/// fixed scheme a=1..z=26, x<i>=i. Throws Error on unknown names or arity
/// mismatch, with the source position.
Poly eval_expr(const Expr& e, const OperationSignature& sig, const VariableMap* vars = nullptr,
               const MacroTable& macros = {});

/// Convenience: parse_expr + eval_expr with the fixed naming scheme.
Poly parse_poly(std::string_view text, const OperationSignature& sig);

/// Renders a variety as a `variety` block that parses back to an equal variety.
std::string render_variety(const Variety& v);

} // namespace gpforge
