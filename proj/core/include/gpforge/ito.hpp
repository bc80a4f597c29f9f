#pragma once

#include "gpforge/table_algebra.hpp"
#include "gpforge/variety.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gpforge {

/// P = A + B with A and B given by spanning vectors in P's coordinates.
struct Decomposition {
	TableAlgebra P;
	std::vector<Element> A;
	std::vector<Element> B;
};

struct ItoCheck {
	bool ok = true;
	std::string what;            // empty on success
	std::vector<Element> witness; // offending elements, if any
	Element value;                // their nonzero product, if any
};

/// A and B abelian (both operations vanish on all pairs of spanning
/// vectors, including a vector with itself) and dim(A + B) = dim(P).
ItoCheck check_hypotheses(const Decomposition& d);

struct RelationVerdict {
	std::string name;
	bool ok = true;
	std::vector<Element> witness;
	Element value;
};

/// The intermediate relations of the metatriviality argument: eight on all
/// basis 4-tuples of P, two on spanning vectors a1, a3 of A and b2, b4 of B.
std::vector<RelationVerdict> check_proof_relations(const Decomposition& d);

/// P^2 (span of all products and brackets) is D-stable, an ideal for both
/// operations, and abelian.
ItoCheck check_metatrivial(const TableAlgebra& P);

enum class SearchMode { coordinate, random };

struct SearchOptions {
	SearchMode mode = SearchMode::coordinate;
	std::uint64_t seed = 0;
	std::size_t cap = 4;
	int random_bases = 1; // random mode: how many random bases to split
};

/// Decompositions passing check_hypotheses, built from pairs of subsets of
/// a basis whose union is the whole basis (the standard basis, or seeded
/// random ones). Throws ResourceError when dim(P) exceeds the cap.
std::vector<Decomposition> search_decompositions(const TableAlgebra& P, const SearchOptions& options = {});

/// GeneralizedPoisson over a signature whose dot product is not assumed commutative.
Variety noncommutative_generalized_poisson();

struct ItoModelResult {
	std::string label;
	bool certified = false;
	std::size_t decompositions = 0;
	bool metatrivial = false;
	std::vector<std::string> violations;
};

struct ItoPoolReport {
	bool noncommutative = false;
	std::vector<ItoModelResult> models;
	std::size_t decompositions = 0;
	std::size_t violations = 0;
	bool ok() const { return violations == 0; }
};

/// Runs the hypotheses/relations/metatriviality checks on one model.
ItoModelResult run_ito(const std::string& label, const TableAlgebra& P, bool noncommutative,
                       const SearchOptions& options = {});

/// Seeded pool of generalized Poisson models of dimension <= 4 (derived
/// brackets of random commutative models, log-canonical Poisson quotients,
/// zero algebras; plus associative commutator models when noncommutative).
ItoPoolReport run_ito_pool(int count, std::uint64_t seed, bool noncommutative);

} // namespace gpforge
