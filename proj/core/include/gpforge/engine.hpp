#pragma once

#include "gpforge/poly.hpp"
#include "gpforge/slice.hpp"
#include "gpforge/variety.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gpforge {

/// Which consequences of the axioms populate a slice.
struct InstanceOptions {
	/// Substitution images and context leaves may carry derivations.
	bool derivation_images = true;
	/// Images may be products over several variables (only matters when the
	/// slice degree exceeds the axiom degree).
	bool monomial_images = true;
	/// One-hole context embeddings.
	bool contexts = true;
	/// Whole-instance derivations. Redundant with derivation images, so off by default.
	bool dshift = false;
	std::size_t max_instances = 500000;
	std::size_t basis_cap = default_basis_cap;

	static InstanceOptions permutations_only()
	{
		InstanceOptions o;
		o.derivation_images = false;
		o.monomial_images = false;
		o.contexts = false;
		return o;
	}
};

/// context[ axiom(images...) ] with `dshift` extra derivations applied.
struct InstanceSpec {
	std::string axiom;
	std::vector<Term> images; // images[i] replaces variable i+1
	std::optional<Term> context;
	int dshift = 0;
};

struct Instance {
	std::string label;
	InstanceSpec spec;
	Poly poly;
};

/// All nonzero consequences of the axioms of `v` in the multilinear
/// degree-n, weight<=W slice, in a fixed order. Throws ResourceError past
/// options.max_instances.
std::vector<Instance> instances(const Variety& v, int n, int max_weight, const InstanceOptions& options = {});

Poly instance_poly(const Variety& v, const InstanceSpec& spec);
std::string instance_label(const InstanceSpec& spec, std::string_view derivation = "D");

struct CertificatePart {
	Rational coeff;
	std::string axiom;
	std::map<int, Term> sigma; // axiom variable -> image
	std::optional<Term> context;
	int dshift = 0;

	friend bool operator==(const CertificatePart&, const CertificatePart&) = default;
};

/// Claim: sum of coeff * dshift-derivative of context[sigma(axiom)] equals target.
struct Certificate {
	Poly target;
	std::vector<CertificatePart> parts;

	friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerifyResult {
	bool ok = false;
	Poly residual; // sum(parts) - target
};

/// Expands one part. Throws Error for unknown axioms, missing images or a
/// non-multilinear result.
Poly part_poly(const CertificatePart& part, const Variety& v);
VerifyResult verify_certificate(const Certificate& c, const Variety& v);

/// Inconclusive outcome: the target is not in the span of the generated
/// instances. Not a disproof.
struct NotInSlice {
	int degree = 0;
	int max_weight = 0;
	std::size_t slice_dimension = 0;
	std::size_t instance_count = 0;
	std::size_t rank = 0;
	std::string reason;
};

using DeriveResult = std::variant<Certificate, NotInSlice>;

/// Searches the slice for an explicit certificate of `target`. n <= 0 takes
/// the degree from the target. Every returned certificate has been verified.
DeriveResult derive(const Poly& target, const Variety& v, int n, int max_weight, const InstanceOptions& options = {});

struct ImplicationEntry {
	std::string axiom;
	DeriveResult result;
	bool derived() const { return std::holds_alternative<Certificate>(result); }
};

struct ImplicationReport {
	std::string from;
	std::string to;
	std::vector<ImplicationEntry> entries;
	bool all_derived() const;
};

/// Runs derive() for every axiom of `to` against `from`. Each axiom is
/// searched in its own degree; n > 0 caps that degree and W is raised to the
/// axiom's own weight when lower.
ImplicationReport check_implication(const Variety& from, const Variety& to, int n, int max_weight,
                                    const InstanceOptions& options = {});

} // namespace gpforge
