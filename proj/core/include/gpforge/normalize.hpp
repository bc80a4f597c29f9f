#pragma once

#include "gpforge/poly.hpp"
#include "gpforge/signature.hpp"

#include <map>
#include <span>
#include <string_view>

namespace gpforge {

/// Normal form of op(args...) with multilinear expansion and symmetry-flag
/// sorting. Throws SignatureError on unknown op or arity mismatch.
Poly apply_op(const OperationSignature& sig, std::string_view op, std::span<const Poly> args);
Poly apply_op(const OperationSignature& sig, std::string_view op, const Poly& a, const Poly& b);
Poly apply_op(const OperationSignature& sig, std::string_view op, const Poly& a);

/// Applies the derivation k times, expanding by the Leibniz rule down to the leaves.
Poly d_apply(const Poly& p, int k, const OperationSignature& sig);

/// Canonical polynomial of a raw tree that may contain derivation nodes.
Poly normalize(const Term& raw, const OperationSignature& sig);
/// Renormalizes every term of p (identity on canonical input).
Poly normalize(const Poly& p, const OperationSignature& sig);

/// Replaces x_i by sigma[i] everywhere (derivations on a leaf act on the
/// image). Throws Error when a variable of p has no image.
Poly substitute(const Poly& p, const std::map<int, Poly>& sigma, const OperationSignature& sig);

/// Variable renaming i -> rename[i]; unmapped variables keep their index.
Poly rename_variables(const Poly& p, const std::map<int, int>& rename, const OperationSignature& sig);

/// Drops every monomial that carries a derivation.
Poly drop_derivation_monomials(const Poly& p);

/// Convenience generator for building identities in code.
inline Poly var(int index, int dpow = 0)
{
	return Poly(Term::var(index, dpow));
}

} // namespace gpforge
