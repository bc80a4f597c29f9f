#pragma once

#include "gpforge/table_algebra.hpp"
#include "gpforge/variety.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gpforge {

/// Seeded generator with a portable bounded draw (the std distributions are
/// not specified bit-for-bit across library implementations).
class SeededRng {
public:
	explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
	/// Uniform-ish integer in [0, n).
	std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
	/// Integer in [lo, hi].
	long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
	bool chance(double p) { return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p; }
	std::uint64_t next() { return gen_(); }

private:
	std::mt19937_64 gen_;
};

enum class TruncatedDerivation { euler, monomial };

/// F[x]/(x^n) on the basis 1, x, ..., x^(n-1) with op "mul" and derivation
/// x d/dx (euler) or x^j d/dx (monomial). Certified CommAssoc; throws
/// ModelError with the Leibniz defect when the derivation does not descend
/// to the quotient (j = 0).
TableAlgebra truncated_poly(int n, TruncatedDerivation kind = TruncatedDerivation::euler, int j = 1);

using Word = std::vector<int>;
using WordCombination = std::map<Word, Integer>;

WordCombination shuffle(const Word& u, const Word& v);
/// (u shuffle v') a where v = v' a: the last letter of the right factor stays last.
WordCombination half_shuffle(const Word& u, const Word& v);

/**
 * Free Zinbiel algebra on k generators modulo words longer than the cap,
 * with the half-shuffle as product "prod". Basis: nonempty words ordered by
 * length, then lexicographically.
 */
class FreeZinbiel {
public:
	FreeZinbiel(int generators, int cap);

	int generators() const { return generators_; }
	int cap() const { return cap_; }
	const std::vector<Word>& words() const { return words_; }
	std::size_t index_of(const Word& w) const;
	Element generator(int g) const { return basis_element(index_of({g})); }
	std::string word_name(const Word& w) const;

	/// Product table with the zero derivation.
	TableAlgebra algebra() const;

	/// The Leibniz extension of D(generator g) = images[g], by
	/// D(u a) = D(u)*a + u*D(a). Contributions past the cap are dropped; with
	/// `strict` a nonzero dropped coefficient throws ModelError instead.
	std::vector<Element> extend_derivation(const std::vector<Element>& images, bool strict = false) const;

	/// algebra() with the extended derivation, certified Zinbiel.
	TableAlgebra with_derivation(const std::vector<Element>& images, bool strict = false) const;

private:
	int generators_;
	int cap_;
	std::vector<Word> words_;
	std::map<Word, std::size_t> index_;
};

/// Polynomials of degree < n with f*g = g * integral_0^x f (op "prod") and
/// D = d/dx. Not certified: D fails the Leibniz rule there, see
/// leibniz_defects().
TableAlgebra integral_zinbiel(int n);

/// Leibniz defects of the integral model restricted to constant-free basis
/// pairs x^i, x^j (i, j >= 1) whose product stays below the truncation.
std::vector<LeibnizDefect> integral_filtered_defects(const TableAlgebra& integral);

/// Nonunital F[x,y]/(deg >= n) with {x^a y^b, x^c y^d} = (ad - bc) x^(a+c) y^(b+d)
/// and D = 0. Certified Poisson.
TableAlgebra log_canonical_poisson(int n);

/// All products zero, D = 0, ops "mul" and "br". Certified GeneralizedPoisson.
TableAlgebra zero_algebra(std::size_t dim);

/// New basis f_i = sum_k columns[i][k] e_k. Throws ModelError when singular.
TableAlgebra change_basis(const TableAlgebra& m, const std::vector<DenseVec>& columns);

/// Certified commutative associative algebra with derivation, built from
/// monomial quotients of polynomial rings with diagonal weight derivations,
/// direct sums, rescalings and basis changes. `sparsity` in [0,1] favours
/// more generators and hence sparser tables.
TableAlgebra random_commassoc_der(std::size_t dim, double sparsity, std::uint64_t seed);

/// Log-canonical bracket on a random monomial quotient of F[x,y]; D = 0.
/// Certified Poisson.
TableAlgebra random_log_canonical(std::size_t dim, std::uint64_t seed);

/// Associative (generally noncommutative) monomial quotient of a free
/// nilpotent algebra with a scaled commutator bracket and D = 0; op "mul"
/// is declared plain.
TableAlgebra random_noncommutative_poisson(std::size_t dim, std::uint64_t seed);

struct LabeledModel {
	std::string label;
	TableAlgebra model;
};

/// Small built-in and seeded random models providing every operation of `sig`.
std::vector<LabeledModel> model_pool(const OperationSignature& sig, std::uint64_t seed, int random_count = 24);

struct Countermodel {
	std::string label;
	TableAlgebra model;
	Violation violation;
};

/// First model of the pool that certifies against `v` and on which `target`
/// does not vanish. Models failing certification are skipped.
std::optional<Countermodel> find_countermodel(const Variety& v, const Poly& target, const std::vector<LabeledModel>& pool);

} // namespace gpforge
