#include "gpforge/engine.hpp"

#include "gpforge/error.hpp"
#include "gpforge/linalg.hpp"
#include "gpforge/normalize.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace gpforge {

namespace {

std::uint64_t bit(int v)
{
	return std::uint64_t(1) << v;
}

// Ordered partitions of `elems` into k nonempty blocks, as bitmasks.
std::vector<std::vector<std::uint64_t>> ordered_partitions(const std::vector<int>& elems, int k, bool singletons_only)
{
	std::vector<std::vector<std::uint64_t>> out;
	if (static_cast<int>(elems.size()) < k || k == 0)
		return out;
	if (singletons_only && static_cast<int>(elems.size()) != k)
		return out;
	std::vector<int> assign(elems.size(), 0);
	std::function<void(std::size_t)> rec = [&](std::size_t i) {
		if (i == elems.size()) {
			std::vector<std::uint64_t> blocks(k, 0);
			for (std::size_t j = 0; j < elems.size(); ++j)
				blocks[assign[j]] |= bit(elems[j]);
			if (std::all_of(blocks.begin(), blocks.end(), [](std::uint64_t b) { return b != 0; }))
				out.push_back(std::move(blocks));
			return;
		}
		for (int b = 0; b < k; ++b) {
			assign[i] = b;
			rec(i + 1);
		}
	};
	rec(0);
	// Canonical order: by the smallest element of each block in turn.
	std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
		for (std::size_t i = 0; i < a.size(); ++i) {
			if (a[i] != b[i]) {
				int ca = std::countr_zero(a[i]), cb = std::countr_zero(b[i]);
				if (ca != cb)
					return ca < cb;
				return a[i] < b[i];
			}
		}
		return false;
	});
	return out;
}

// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
void compositions(int total, int parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f)
{
	if (static_cast<int>(cur.size()) == parts - 1) {
		cur.push_back(total);
		f(cur);
		cur.pop_back();
		return;
	}
	for (int w = 0; w <= total; ++w) {
		cur.push_back(w);
		compositions(total - w, parts, cur, f);
		cur.pop_back();
	}
}

int axiom_degree(const Poly& p)
{
	return static_cast<int>(p.variables().size());
}

} // namespace

Poly instance_poly(const Variety& v, const InstanceSpec& spec)
{
	const Axiom* ax = v.find_axiom(spec.axiom);
	if (!ax)
		throw Error("variety '" + v.name() + "' has no axiom '" + spec.axiom + "'");
	const auto& sig = v.signature();
	std::map<int, Poly> sigma;
	for (std::size_t i = 0; i < spec.images.size(); ++i)
		sigma.emplace(static_cast<int>(i) + 1, Poly(spec.images[i]));
	Poly inst = substitute(ax->poly, sigma, sig);
	if (spec.context) {
		std::map<int, Poly> fill;
		for (int leaf : spec.context->leaves())
			fill.emplace(leaf, leaf == hole_index ? inst : Poly(Term::var(leaf)));
		inst = substitute(Poly(*spec.context), fill, sig);
	}
	if (spec.dshift > 0)
		inst = d_apply(inst, spec.dshift, sig);
	return inst;
}

std::string instance_label(const InstanceSpec& spec, std::string_view derivation)
{
	std::string s = spec.axiom + "(";
	for (std::size_t i = 0; i < spec.images.size(); ++i) {
		if (i)
			s += ",";
		s += to_string(spec.images[i], derivation);
	}
	s += ")";
	if (spec.context)
		s += " in " + to_string(*spec.context, derivation);
	if (spec.dshift > 0)
		s += " dshift " + std::to_string(spec.dshift);
	return s;
}

std::vector<Instance> instances(const Variety& v, int n, int max_weight, const InstanceOptions& options)
{
	if (n < 1 || max_weight < 0)
		throw Error("instances require n >= 1 and W >= 0");
	if (n > 62)
		throw ResourceError("slice degree above 62 is not supported");
	const auto& sig = v.signature();
	auto der = sig.derivation_name();
	TermEnumerator gen(sig, options.basis_cap);
	std::vector<Instance> out;

	auto emit = [&](InstanceSpec spec) {
		Poly p = instance_poly(v, spec);
		if (p.is_zero())
			return;
		std::string label = instance_label(spec, der);
		out.push_back({std::move(label), std::move(spec), std::move(p)});
		if (out.size() > options.max_instances)
			throw ResourceError("instance generation exceeded cap of " + std::to_string(options.max_instances));
	};

	std::vector<int> all(n);
	for (int i = 0; i < n; ++i)
		all[i] = i + 1;

	for (const auto& ax : v.axioms()) {
		if (ax.poly.is_zero())
			continue;
		const int d = axiom_degree(ax.poly);
		const int budget = max_weight - ax.poly.weight();
		if (d > n || budget < 0)
			continue;
		const bool single = !options.monomial_images;
		// Context variable sets by size, then by mask.
		std::vector<std::uint64_t> context_sets{0};
		if (options.contexts) {
			std::vector<std::uint64_t> rest;
			for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m)
				rest.push_back(m << 1);
			std::stable_sort(rest.begin(), rest.end(),
			                 [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
			context_sets.insert(context_sets.end(), rest.begin(), rest.end());
		}
		for (std::uint64_t ctx : context_sets) {
			std::vector<int> free;
			for (int x : all)
				if (!(ctx & bit(x)))
					free.push_back(x);
			auto parts = ordered_partitions(free, d, single);
			// The image blocks, the context and the dshift share the budget.
			const int slots = d + (ctx ? 1 : 0) + (options.dshift ? 1 : 0);
			for (int spend = 0; spend <= budget; ++spend) {
				if (!options.derivation_images && !options.dshift && spend > 0)
					break;
				std::vector<int> cur;
				compositions(spend, slots, cur, [&](const std::vector<int>& w) {
					int shift = options.dshift ? w.back() : 0;
					int wctx = ctx ? w[d] : 0;
					if (!options.derivation_images) {
						for (int i = 0; i < d; ++i)
							if (w[i] != 0)
								return;
						if (wctx != 0)
							return;
					}
					for (const auto& blocks : parts) {
						std::vector<const std::vector<Term>*> choices;
						for (int i = 0; i < d; ++i)
							choices.push_back(&gen.terms(blocks[i], w[i]));
						const std::vector<Term>* ctx_terms = nullptr;
						if (ctx) {
							ctx_terms = &gen.terms(ctx | bit(hole_index), wctx);
							if (ctx_terms->empty())
								continue;
						}
						if (std::any_of(choices.begin(), choices.end(), [](auto* c) { return c->empty(); }))
							continue;
						std::vector<std::size_t> idx(d, 0);
						while (true) {
							InstanceSpec spec;
							spec.axiom = ax.name;
							for (int i = 0; i < d; ++i)
								spec.images.push_back((*choices[i])[idx[i]]);
							spec.dshift = shift;
							if (ctx) {
								for (const auto& c : *ctx_terms) {
									InstanceSpec s = spec;
									s.context = c;
									emit(std::move(s));
								}
							} else {
								emit(std::move(spec));
							}
							int k = d - 1;
							while (k >= 0 && ++idx[k] == choices[k]->size()) {
								idx[k] = 0;
								--k;
							}
							if (k < 0)
								break;
						}
					}
				});
			}
		}
	}
	return out;
}

Poly part_poly(const CertificatePart& part, const Variety& v)
{
	const Axiom* ax = v.find_axiom(part.axiom);
	if (!ax)
		throw Error("variety '" + v.name() + "' has no axiom '" + part.axiom + "'");
	InstanceSpec spec;
	spec.axiom = part.axiom;
	int d = axiom_degree(ax->poly);
	for (int i = 1; i <= d; ++i) {
		auto it = part.sigma.find(i);
		if (it == part.sigma.end())
			throw Error("substitution for axiom '" + part.axiom + "' has no image for " + var_name(i));
		spec.images.push_back(it->second);
	}
	spec.context = part.context;
	spec.dshift = part.dshift;
	Poly p = instance_poly(v, spec);
	for (const auto& [t, c] : p)
		if (!t.is_multilinear())
			throw Error("substitution for axiom '" + part.axiom + "' gives a non-multilinear term " +
			            to_string(t, v.signature().derivation_name()));
	return part.coeff * p;
}

VerifyResult verify_certificate(const Certificate& c, const Variety& v)
{
	Poly sum;
	for (const auto& part : c.parts)
		sum += part_poly(part, v);
	VerifyResult r;
	r.residual = sum - normalize(c.target, v.signature());
	r.ok = r.residual.is_zero();
	return r;
}

DeriveResult derive(const Poly& target, const Variety& v, int n, int max_weight, const InstanceOptions& options)
{
	const auto& sig = v.signature();
	Poly canon = normalize(target, sig);
	if (canon.is_zero())
		return Certificate{canon, {}};
	if (!canon.is_multilinear())
		throw Error("derive target must be multilinear");
	int deg = canon.degree();
	if (n <= 0)
		n = deg;
	if (deg != n)
		throw Error("derive target has degree " + std::to_string(deg) + ", slice degree is " + std::to_string(n));
	if (canon.weight() > max_weight)
		throw Error("derive target has weight " + std::to_string(canon.weight()) + " above the slice bound " +
		            std::to_string(max_weight));

	SliceBasis basis = enumerate_basis(n, max_weight, sig, options.basis_cap);
	auto target_vec = basis.to_sparse(canon);
	auto inst = instances(v, n, max_weight, options);

	IncrementalEchelon ech(basis.size());
	for (std::size_t i = 0; i < inst.size(); ++i)
		ech.add(basis.to_sparse(inst[i].poly), i);
	auto sol = ech.solve(target_vec);
	if (!sol) {
		NotInSlice nis;
		nis.degree = n;
		nis.max_weight = max_weight;
		nis.slice_dimension = basis.size();
		nis.instance_count = inst.size();
		nis.rank = ech.rank();
		nis.reason = "target is not in the span of the generated instances";
		return nis;
	}
	Certificate cert;
	cert.target = canon;
	for (const auto& [i, c] : *sol) {
		CertificatePart part;
		part.coeff = c;
		part.axiom = inst[i].spec.axiom;
		for (std::size_t k = 0; k < inst[i].spec.images.size(); ++k)
			part.sigma.emplace(static_cast<int>(k) + 1, inst[i].spec.images[k]);
		part.context = inst[i].spec.context;
		part.dshift = inst[i].spec.dshift;
		cert.parts.push_back(std::move(part));
	}
	auto check = verify_certificate(cert, v);
	if (!check.ok)
		throw Error("internal error: derived certificate failed verification, residual " +
		            to_string(check.residual, sig.derivation_name()));
	return cert;
}

bool ImplicationReport::all_derived() const
{
	return std::all_of(entries.begin(), entries.end(), [](const ImplicationEntry& e) { return e.derived(); });
}

ImplicationReport check_implication(const Variety& from, const Variety& to, int n, int max_weight,
                                    const InstanceOptions& options)
{
	if (!from.signature().extends(to.signature()))
		throw SignatureError("variety '" + from.name() + "' does not share the signature of '" + to.name() + "'");
	ImplicationReport report;
	report.from = from.name();
	report.to = to.name();
	for (const auto& ax : to.axioms()) {
		ImplicationEntry e{ax.name, NotInSlice{}};
		int d = ax.poly.is_zero() ? 0 : ax.poly.degree();
		if (ax.poly.is_zero()) {
			e.result = Certificate{};
		} else if (n > 0 && d > n) {
			NotInSlice nis;
			nis.degree = d;
			nis.max_weight = max_weight;
			nis.reason = "axiom degree exceeds the slice bound";
			e.result = nis;
		} else {
			e.result = derive(ax.poly, from, d, std::max(max_weight, ax.poly.weight()), options);
		}
		report.entries.push_back(std::move(e));
	}
	return report;
}

} // namespace gpforge
