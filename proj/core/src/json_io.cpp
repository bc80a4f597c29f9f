#include "gpforge/json_io.hpp"

#include "gpforge/dsl.hpp"
#include "gpforge/error.hpp"
#include "gpforge/variety.hpp"
#include "json_detail.hpp"

#include <algorithm>

namespace gpforge {

namespace detail {

Json to_json(const Rational& q)
{
	return to_pq_string(q);
}

Rational rational_from_json(const Json& j)
{
	if (!j.is_string())
		throw ParseError("expected a rational string \"p/q\"");
	return parse_rational(j.get<std::string>());
}

Json to_json(const Element& e, std::size_t dim)
{
	Json arr = Json::array();
	for (const auto& x : to_dense(e, dim))
		arr.push_back(to_json(x));
	return arr;
}

namespace {

Element element_from_json(const Json& j, std::size_t dim)
{
	if (!j.is_array() || j.size() != dim)
		throw ParseError("expected an array of " + std::to_string(dim) + " rationals");
	DenseVec v;
	for (const auto& x : j)
		v.push_back(rational_from_json(x));
	return to_sparse(v);
}

// A single term with its coefficient, as written in a certificate.
std::pair<Rational, Term> single_term(const Json& j, const OperationSignature& sig)
{
	if (!j.is_string())
		throw ParseError("expected a term string");
	Poly p = parse_poly(j.get<std::string>(), sig);
	if (p.size() != 1)
		throw ParseError("'" + j.get<std::string>() + "' is not a single term");
	return {p.begin()->second, p.begin()->first};
}

} // namespace

Json to_json(const Poly& p, std::string_view derivation)
{
	Json arr = Json::array();
	for (const auto& [t, c] : p)
		arr.push_back(Json::array({to_json(c), to_string(t, derivation)}));
	return arr;
}

Json to_json(const TableAlgebra& m)
{
	const std::size_t n = m.dim();
	Json j;
	j["dim"] = n;
	Json ops = Json::object();
	for (const auto& o : m.ops()) {
		Json table = Json::array();
		for (std::size_t i = 0; i < n; ++i) {
			Json row = Json::array();
			for (std::size_t k = 0; k < n; ++k)
				row.push_back(to_json(m.product(o.name, i, k), n));
			table.push_back(std::move(row));
		}
		ops[o.name] = Json{{"symmetry", std::string(to_string(o.symmetry))}, {"table", std::move(table)}};
	}
	j["ops"] = std::move(ops);
	Json ders = Json::object();
	if (m.has_derivation()) {
		Json rows = Json::array();
		for (const auto& e : m.derivation())
			rows.push_back(to_json(e, n));
		ders[m.derivation_name()] = std::move(rows);
	}
	j["derivations"] = std::move(ders);
	Json cert = Json::array();
	for (const auto& name : m.certified())
		cert.push_back(name);
	j["certified"] = std::move(cert);
	return j;
}

Json to_json(const Certificate& c, std::string_view derivation)
{
	Json j;
	j["target"] = to_json(c.target, derivation);
	Json parts = Json::array();
	for (const auto& p : c.parts) {
		Json sigma = Json::object();
		for (const auto& [v, t] : p.sigma)
			sigma[var_name(v)] = to_string(t, derivation);
		Json part;
		part["coeff"] = to_json(p.coeff);
		part["axiom"] = p.axiom;
		part["sigma"] = std::move(sigma);
		part["context"] = p.context ? Json(to_string(*p.context, derivation)) : Json(nullptr);
		part["dshift"] = p.dshift;
		parts.push_back(std::move(part));
	}
	j["parts"] = std::move(parts);
	return j;
}

Json to_json(const NotInSlice& n)
{
	Json j;
	j["degree"] = n.degree;
	j["dweight"] = n.max_weight;
	j["slice_dimension"] = n.slice_dimension;
	j["instances"] = n.instance_count;
	j["rank"] = n.rank;
	j["reason"] = n.reason;
	return j;
}

Json to_json(const CheckResult& r, std::size_t dim)
{
	Json j;
	j["ok"] = r.ok;
	if (!r.ok) {
		j["failed"] = r.failed;
		j["tuple"] = r.tuple;
		j["residual"] = to_json(r.residual, dim);
	}
	return j;
}

TableAlgebra model_from_json(const Json& j)
{
	try {
		std::size_t n = j.at("dim").get<std::size_t>();
		if (n > 4096)
			throw ResourceError("model dimension " + std::to_string(n) + " exceeds 4096");
		TableAlgebra m(n);
		for (const auto& [name, op] : j.at("ops").items()) {
			m.add_op(name, parse_symmetry(op.at("symmetry").get<std::string>()));
			const Json& table = op.at("table");
			if (!table.is_array() || table.size() != n)
				throw ParseError("table of '" + name + "' must have " + std::to_string(n) + " rows");
			for (std::size_t i = 0; i < n; ++i) {
				if (!table[i].is_array() || table[i].size() != n)
					throw ParseError("table row of '" + name + "' must have " + std::to_string(n) + " entries");
				for (std::size_t k = 0; k < n; ++k)
					m.set_product(name, i, k, element_from_json(table[i][k], n));
			}
		}
		if (j.contains("derivations")) {
			const Json& ders = j.at("derivations");
			if (ders.size() > 1)
				throw ModelError("a model carries at most one derivation");
			for (const auto& [name, rows] : ders.items()) {
				if (!rows.is_array() || rows.size() != n)
					throw ParseError("derivation '" + name + "' must have " + std::to_string(n) + " rows");
				std::vector<Element> images;
				for (const auto& r : rows)
					images.push_back(element_from_json(r, n));
				m.set_derivation(name, std::move(images));
			}
		}
		if (j.contains("certified")) {
			const auto& names = builtin_names();
			for (const auto& c : j.at("certified")) {
				std::string name = c.get<std::string>();
				if (std::find(names.begin(), names.end(), name) == names.end())
					continue;
				auto r = check_axioms(m, builtin(name));
				if (!r.ok)
					throw ModelError("model claims " + name + " but fails " + r.failed);
			}
		}
		return m;
	} catch (const nlohmann::json::exception& e) {
		throw ParseError(std::string("malformed model JSON: ") + e.what());
	}
}

Certificate certificate_from_json(const Json& j, const OperationSignature& sig)
{
	try {
		Certificate c;
		for (const auto& mono : j.at("target")) {
			auto [coeff, term] = single_term(mono.at(1), sig);
			c.target += (rational_from_json(mono.at(0)) * coeff) * Poly(term);
		}
		for (const auto& pj : j.at("parts")) {
			CertificatePart part;
			part.coeff = rational_from_json(pj.at("coeff"));
			part.axiom = pj.at("axiom").get<std::string>();
			for (const auto& [name, tj] : pj.at("sigma").items()) {
				int v = canonical_var_index(name);
				if (v < 1)
					throw ParseError("bad variable name '" + name + "' in substitution");
				auto [coeff, term] = single_term(tj, sig);
				part.coeff *= coeff;
				part.sigma.emplace(v, term);
			}
			if (pj.contains("context") && !pj.at("context").is_null()) {
				auto [coeff, term] = single_term(pj.at("context"), sig);
				part.coeff *= coeff;
				part.context = term;
			}
			if (pj.contains("dshift"))
				part.dshift = pj.at("dshift").get<int>();
			c.parts.push_back(std::move(part));
		}
		return c;
	} catch (const nlohmann::json::exception& e) {
		throw ParseError(std::string("malformed certificate JSON: ") + e.what());
	}
}

} // namespace detail

std::string model_to_json(const TableAlgebra& m)
{
	return detail::to_json(m).dump(2);
}

TableAlgebra model_from_json(std::string_view text)
{
	detail::Json j;
	try {
		j = detail::Json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		throw ParseError(std::string("invalid JSON: ") + e.what());
	}
	return detail::model_from_json(j);
}

std::string certificate_to_json(const Certificate& c, std::string_view derivation)
{
	return detail::to_json(c, derivation).dump(2);
}

Certificate certificate_from_json(std::string_view text, const OperationSignature& sig)
{
	detail::Json j;
	try {
		j = detail::Json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		throw ParseError(std::string("invalid JSON: ") + e.what());
	}
	return detail::certificate_from_json(j, sig);
}

} // namespace gpforge
