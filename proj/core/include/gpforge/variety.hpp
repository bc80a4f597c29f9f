#pragma once

#include "gpforge/poly.hpp"
#include "gpforge/signature.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gpforge {

/// A defining identity, read as `poly = 0`.
struct Axiom {
	std::string name;
	Poly poly;

	friend bool operator==(const Axiom&, const Axiom&) = default;
};

/**
 * An algebra class: operation signature plus multilinear axioms.
 *
 * The constructor canonicalizes every axiom over the signature and replaces
 * non-multilinear ones by their full linearizations (one axiom per
 * homogeneous component, suffixed "#k" when there are several).
 */
class Variety {
public:
	Variety() = default;
	Variety(std::string name, OperationSignature sig, std::vector<Axiom> axioms);

	const std::string& name() const { return name_; }
	const OperationSignature& signature() const { return sig_; }
	const std::vector<Axiom>& axioms() const { return axioms_; }
	const Axiom* find_axiom(std::string_view name) const;

	friend bool operator==(const Variety&, const Variety&) = default;

private:
	std::string name_;
	OperationSignature sig_;
	std::vector<Axiom> axioms_;
};

/// Full multilinearization (char 0 polarization). Splits p into homogeneous
/// components by variable multiset; each result uses variables 1..d.
std::vector<Poly> multilinearize(const Poly& p, const OperationSignature& sig);

/// Same variety with every derivation-carrying monomial removed from each axiom.
Variety drop_derivation_terms(const Variety& v, std::string new_name);

/// Union of axioms of two varieties over a common signature.
Variety combine(std::string name, const Variety& a, const Variety& b);

/// Built-in signatures; every one declares the derivation "D".
namespace sigs {
OperationSignature commutative();      // mul (commutative)
OperationSignature lie();              // br (anticommutative)
OperationSignature dot_bracket();      // mul, br
OperationSignature star();             // star (plain)
OperationSignature zinbiel();          // prod (plain)
} // namespace sigs

/// The displayed identities, in variables x=1, y=2, z=3 (and w=4 where used).
/// Products written a·b inside the single-operation identities stand for the
/// symmetrized product (a⋆b + b⋆a)/2.
namespace identities {
Poly associator();         // (x·y)·z - x·(y·z)
Poly jacobi();             // [[x,y],z] + [[y,z],x] + [[z,x],y]
Poly leibniz();            // [x·y,z] - x·[y,z] - [x,z]·y
Poly generalized_leibniz();// leibniz - (x·y)·D(z)
Poly transposed_leibniz(); // 2x·[y,z] - [x·y,z] - [y,x·z]
Poly int1();               // x·[y,z] - (x·z)·D(y) + (x·y)·D(z)
Poly int2();               // [x·y,z] - (y·z)·D(x) - (x·z)·D(y) + (x·y)·D(z)
Poly dot_kills_bracket();  // x·[y,z]
Poly bracket_kills_dot();  // [x·y,z]
Poly zinbiel();            // (x y + y x) z - x (y z), over prod
Poly left_symmetric();     // (x⋆y)⋆z - x⋆(y⋆z) - (y⋆x)⋆z + y⋆(x⋆z)
Poly psi();                // single-operation generalized Poisson identity
Poly f();                  // first single-operation GP∩TP identity
Poly g();                  // second single-operation GP∩TP identity
Poly reverse_associative();// x⋆(y⋆z) - (z⋆y)⋆x
Poly reverse_companion();  // (x⋆y)⋆z - x⋆(y⋆z) - 1/2 (x⋆z)⋆y + 1/2 (z⋆x)⋆y
} // namespace identities

/// Names accepted by builtin().
const std::vector<std::string>& builtin_names();
/// Throws Error for unknown names.
Variety builtin(std::string_view name);

} // namespace gpforge
