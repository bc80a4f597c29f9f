#pragma once

#include "gpforge/poly.hpp"
#include "gpforge/signature.hpp"
#include "gpforge/table_algebra.hpp"
#include "gpforge/variety.hpp"

#include <string>

namespace gpforge {

/// Names of the single operation and of its symmetric and antisymmetric
/// halves: x*y = x.y + [x,y] with x.y = (x*y + y*x)/2, [x,y] = (x*y - y*x)/2.
struct PolarizationMap {
	std::string star = "star";
	std::string dot = "mul";
	std::string bracket = "br";
};

/// {dot: commutative, bracket: anticommutative} plus the derivation D.
OperationSignature polarized_signature(const PolarizationMap& map = {});
/// {star: plain} plus the derivation D.
OperationSignature depolarized_signature(const PolarizationMap& map = {});

/// x*y -> x.y + [x,y]. Throws SignatureError on any other operation.
Poly polarize(const Poly& p, const PolarizationMap& map = {});
/// x.y -> (x*y + y*x)/2, [x,y] -> (x*y - y*x)/2. Throws SignatureError on any other operation.
Poly depolarize(const Poly& p, const PolarizationMap& map = {});

Variety polarize(const Variety& v, std::string name, const PolarizationMap& map = {});
Variety depolarize(const Variety& v, std::string name, const PolarizationMap& map = {});

/// Tables of the two halves of the star table; derivation kept.
TableAlgebra polarize_model(const TableAlgebra& m, const PolarizationMap& map = {});
/// star = dot + bracket; derivation kept.
TableAlgebra depolarize_model(const TableAlgebra& m, const PolarizationMap& map = {});

/// Adds [a,b] = D(a).b - a.D(b) to a commutative associative algebra with
/// derivation, then certifies the result against GeneralizedPoisson and
/// TransposedPoisson. Throws ModelError (with a witness) when the input is
/// not such an algebra.
TableAlgebra derived_bracket(const TableAlgebra& m);

/// a*b = D(a)b - aD(b) on a Zinbiel algebra (op "prod") with derivation;
/// output has op "star" and is certified against LeftSymmetric. Throws
/// ModelError naming the offending pair when D is not a derivation.
TableAlgebra zinbiel_star(const TableAlgebra& m);

/// a.b = ab + ba and [a,b] = a*b - b*a for the star above; output is
/// certified against GeneralizedPoisson and TransposedPoisson.
TableAlgebra zinbiel_polarization(const TableAlgebra& m);

} // namespace gpforge
