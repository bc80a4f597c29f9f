#include "gpforge/script.hpp"

#include "gpforge/engine.hpp"
#include "gpforge/error.hpp"
#include "gpforge/ito.hpp"
#include "gpforge/json_io.hpp"
#include "gpforge/model_families.hpp"
#include "gpforge/transforms.hpp"
#include "json_detail.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gpforge {

namespace {

using detail::Json;

std::string read_file(const std::filesystem::path& p)
{
	std::ifstream in(p, std::ios::binary);
	if (!in)
		throw Error("cannot read '" + p.string() + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

// Prefix rendering with the script's own variable names.
std::string term_text(const Term& t, const std::vector<std::string>& names, std::string_view der)
{
	if (t.is_var()) {
		int v = t.var_index();
		std::string s = v >= 1 && static_cast<std::size_t>(v) <= names.size() ? names[v - 1] : var_name(v);
		for (int k = 0; k < t.dpow(); ++k)
			s = std::string(der) + "(" + s + ")";
		return s;
	}
	std::string s = t.op() + "(";
	for (std::size_t i = 0; i < t.children().size(); ++i)
		s += (i ? "," : "") + term_text(t.child(i), names, der);
	return s + ")";
}

std::string poly_text(const Poly& p, const std::vector<std::string>& names, std::string_view der)
{
	if (p.is_zero())
		return "0";
	std::string s;
	bool first = true;
	for (const auto& [t, c] : p) {
		Rational a = abs(c);
		s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
		if (a != 1)
			s += to_display_string(a) + "*";
		s += term_text(t, names, der);
		first = false;
	}
	return s;
}

std::vector<std::string> names_of(const VariableMap& vars)
{
	std::vector<std::string> names(vars.index.size());
	for (const auto& [n, i] : vars.index)
		names[i - 1] = n;
	return names;
}

std::string part_text(const CertificatePart& p, std::string_view der)
{
	InstanceSpec spec{p.axiom, {}, p.context, p.dshift};
	for (const auto& [v, t] : p.sigma)
		spec.images.push_back(t);
	return to_display_string(p.coeff) + " * " + instance_label(spec, der);
}

class Runner {
public:
	explicit Runner(const RunOptions& o) : opts_(o) {}

	RunResult run(const Script& s)
	{
		Json queries = Json::array();
		for (const auto& st : s.statements) {
			line_ = st.pos.line;
			try {
				std::visit([&](const auto& n) { exec(n, queries); }, st.node);
			} catch (const std::exception& e) {
				Json j;
				j["line"] = line_;
				j["statement"] = print_statement(st);
				j["ok"] = false;
				j["error"] = e.what();
				queries.push_back(std::move(j));
				say("[error] line " + std::to_string(line_) + ": " + e.what());
				failed_ = true;
				break;
			}
		}
		Json report;
		report["ok"] = !failed_;
		report["queries"] = std::move(queries);
		RunResult r;
		r.exit_code = failed_ ? exit_query_failed : exit_ok;
		r.text = text_.str();
		r.json = report.dump(2) + "\n";
		return r;
	}

private:
	void say(const std::string& line) { text_ << line << "\n"; }

	Variety resolve(const VarietyRef& r) const
	{
		auto it = varieties_.find(r.name);
		if (it != varieties_.end())
			return it->second;
		if (r.builtin)
			return builtin(r.name);
		throw Error("unknown variety '" + r.name + "'");
	}

	TableAlgebra& model(const std::string& name)
	{
		auto it = models_.find(name);
		if (it == models_.end())
			throw Error("unknown model '" + name + "'");
		return it->second;
	}

	InstanceOptions instance_options() const
	{
		InstanceOptions o;
		o.basis_cap = opts_.cap;
		return o;
	}

	int degree_for(const QueryDecl& q) const
	{
		auto it = q.options.find("degree");
		return it != q.options.end() ? it->second : opts_.degree;
	}

	int dweight_for(const QueryDecl& q, int needed) const
	{
		auto it = q.options.find("dweight");
		if (it != q.options.end())
			return it->second;
		if (opts_.dweight >= 0)
			return opts_.dweight;
		return std::max(1, needed);
	}

	// ---- declarations ----

	void exec(const VarietyDecl& d, Json&)
	{
		if (d.source == "builtin") {
			Variety b = builtin(d.from->name);
			varieties_[d.name] = Variety(d.name, b.signature(), b.axioms());
		} else if (d.source == "polarize") {
			varieties_[d.name] = polarize(resolve(*d.from), d.name);
		} else if (d.source == "depolarize") {
			varieties_[d.name] = depolarize(resolve(*d.from), d.name);
		} else if (d.source == "drop_derivations") {
			varieties_[d.name] = drop_derivation_terms(resolve(*d.from), d.name);
		} else {
			std::vector<Operation> ops;
			std::vector<std::string> ders;
			std::vector<Axiom> axioms;
			auto add_op = [&](const Operation& o) {
				for (const auto& x : ops)
					if (x.name == o.name) {
						if (!(x == o))
							throw SignatureError("operation '" + o.name + "' declared twice with different flags");
						return;
					}
				ops.push_back(o);
			};
			auto add_der = [&](const std::string& n) {
				if (std::find(ders.begin(), ders.end(), n) == ders.end())
					ders.push_back(n);
			};
			for (const auto& inc : d.includes) {
				Variety v = resolve(inc);
				for (const auto& o : v.signature().ops())
					add_op(o);
				for (const auto& n : v.signature().derivations())
					add_der(n);
				for (const auto& a : v.axioms())
					axioms.push_back(a);
			}
			for (const auto& o : d.ops)
				add_op({o.name, o.arity, o.symmetry});
			for (const auto& n : d.derivations)
				add_der(n);
			OperationSignature sig(ops, ders);
			for (const auto& a : d.axioms) {
				auto vars = VariableMap::scoped({&a.lhs, &a.rhs}, sig, macros_);
				Poly p = eval_expr(a.lhs, sig, &vars, macros_) - eval_expr(a.rhs, sig, &vars, macros_);
				axioms.push_back({a.name, p});
			}
			varieties_[d.name] = Variety(d.name, sig, std::move(axioms));
		}
		const Variety& v = varieties_[d.name];
		say("variety " + v.name() + ": " + std::to_string(v.axioms().size()) + " axiom(s)");
	}

	void exec(const PolyDecl& d, Json&) { macros_[d.name] = d; }

	struct Args {
		const ModelDecl& decl;

		const ModelArg* find(std::string_view key, std::size_t position) const
		{
			for (const auto& a : decl.args)
				if (a.key == key)
					return &a;
			std::size_t k = 0;
			for (const auto& a : decl.args) {
				if (!a.key.empty())
					continue;
				if (k++ == position)
					return &a;
			}
			return nullptr;
		}
		const ModelArg& need(std::string_view key, std::size_t position) const
		{
			if (auto a = find(key, position))
				return *a;
			throw Error(decl.kind + ": missing argument '" + std::string(key) + "'");
		}
		long integer(std::string_view key, std::size_t position, std::optional<long> def = std::nullopt) const
		{
			const ModelArg* a = find(key, position);
			if (!a) {
				if (def)
					return *def;
				need(key, position);
			}
			if (a->kind != ModelArg::Kind::number || a->number.get_den() != 1 || !a->number.get_num().fits_slong_p())
				throw Error(decl.kind + ": argument '" + std::string(key) + "' must be an integer");
			return a->number.get_num().get_si();
		}
		std::uint64_t seed(std::string_view key, std::size_t position, std::uint64_t def) const
		{
			const ModelArg* a = find(key, position);
			if (!a)
				return def;
			if (a->kind != ModelArg::Kind::number || a->number.get_den() != 1 || a->number < 0)
				throw Error(decl.kind + ": argument '" + std::string(key) + "' must be a nonnegative integer");
			return std::stoull(a->number.get_num().get_str());
		}
		Rational number(std::string_view key, std::size_t position, Rational def) const
		{
			const ModelArg* a = find(key, position);
			if (!a)
				return def;
			if (a->kind != ModelArg::Kind::number)
				throw Error(decl.kind + ": argument '" + std::string(key) + "' must be a number");
			return a->number;
		}
		std::string word(std::string_view key, std::size_t position, std::string def) const
		{
			const ModelArg* a = find(key, position);
			if (!a)
				return def;
			if (a->kind == ModelArg::Kind::number)
				throw Error(decl.kind + ": argument '" + std::string(key) + "' must be a name");
			return a->text;
		}
	};

	TableAlgebra build(const ModelDecl& d)
	{
		Args a{d};
		const std::string& k = d.kind;
		auto small = [&](std::string_view key, std::size_t pos, long lo, long hi, std::optional<long> def = {}) {
			long v = a.integer(key, pos, def);
			if (v < lo || v > hi)
				throw Error(k + ": argument '" + std::string(key) + "' must be in " + std::to_string(lo) + ".." +
				            std::to_string(hi));
			return static_cast<int>(v);
		};
		if (k == "truncpoly") {
			int n = small("n", 0, 1, 512);
			std::string der = a.word("der", 1, "euler");
			if (der == "euler")
				return truncated_poly(n);
			if (der == "monomial")
				return truncated_poly(n, TruncatedDerivation::monomial, small("j", 2, 0, 512, 1));
			throw Error("truncpoly: unknown derivation '" + der + "' (euler or monomial)");
		}
		if (k == "freezinbiel") {
			int gens = small("k", 0, 1, 8);
			int cap = small("n", 1, 1, 12);
			FreeZinbiel fz(gens, cap);
			std::string der = a.word("der", 2, "identity");
			std::vector<Element> images(gens);
			for (int g = 0; g < gens; ++g) {
				if (der == "identity")
					images[g] = fz.generator(g);
				else if (der == "shift" && g + 1 < gens)
					images[g] = fz.generator(g + 1);
				else if (der != "shift" && der != "zero")
					throw Error("freezinbiel: unknown derivation '" + der + "' (identity, shift or zero)");
			}
			return fz.with_derivation(images, small("strict", 3, 0, 1, 0) == 1);
		}
		if (k == "integral")
			return integral_zinbiel(small("n", 0, 1, 512));
		if (k == "logcanonical")
			return log_canonical_poisson(small("n", 0, 2, 32));
		if (k == "zero")
			return zero_algebra(small("dim", 0, 0, 512));
		if (k == "random") {
			int dim = small("dim", 0, 1, 64);
			std::uint64_t seed = a.seed("seed", 1, opts_.seed);
			Rational sp = a.number("sparsity", 2, Rational(3, 10));
			return random_commassoc_der(dim, sp.get_d(), seed);
		}
		if (k == "random_logcanonical")
			return random_log_canonical(small("dim", 0, 1, 64), a.seed("seed", 1, opts_.seed));
		if (k == "random_noncommutative")
			return random_noncommutative_poisson(small("dim", 0, 1, 64), a.seed("seed", 1, opts_.seed));
		if (k == "load") {
			std::string path = a.word("file", 0, "");
			return model_from_json(read_file(std::filesystem::path(opts_.base_dir) / path));
		}
		auto source = [&]() -> const TableAlgebra& { return model(a.word("model", 0, "")); };
		if (k == "derived_bracket")
			return derived_bracket(source());
		if (k == "zinbiel_star")
			return zinbiel_star(source());
		if (k == "zinbiel_polarization")
			return zinbiel_polarization(source());
		if (k == "polarize")
			return polarize_model(source());
		if (k == "depolarize")
			return depolarize_model(source());
		throw Error("unknown model constructor '" + k + "'");
	}

	void exec(const ModelDecl& d, Json&)
	{
		models_[d.name] = build(d);
		const TableAlgebra& m = models_[d.name];
		std::string cert;
		for (const auto& c : m.certified())
			cert += (cert.empty() ? "" : ", ") + c;
		say("model " + d.name + ": dim " + std::to_string(m.dim()) + (cert.empty() ? "" : ", certified " + cert));
	}

	// ---- queries ----

	Json begin(const QueryDecl& q)
	{
		Json j;
		j["line"] = line_;
		j["kind"] = q.kind;
		return j;
	}

	void finish(Json& j, Json& out, bool ok, const std::string& summary)
	{
		j["ok"] = ok;
		out.push_back(std::move(j));
		if (!ok)
			failed_ = true;
		say(std::string(ok ? "[ok] " : "[fail] ") + "line " + std::to_string(line_) + ": " + summary);
	}

	void print_certificate(const Certificate& c, std::string_view der)
	{
		for (const auto& p : c.parts)
			say("    " + part_text(p, der));
	}

	Json countermodel_json(const Countermodel& cm)
	{
		Json j;
		j["model"] = cm.label;
		j["tuple"] = cm.violation.tuple;
		j["value"] = detail::to_json(cm.violation.value, cm.model.dim());
		j["table"] = detail::to_json(cm.model);
		return j;
	}

	Json implication_json(const ImplicationReport& r, const Variety& from, const Variety& to)
	{
		std::string der(from.signature().derivation_name());
		Json entries = Json::array();
		for (const auto& e : r.entries) {
			Json j;
			j["axiom"] = e.axiom;
			j["derived"] = e.derived();
			if (const auto* c = std::get_if<Certificate>(&e.result)) {
				j["certificate"] = detail::to_json(*c, der);
				say("  " + e.axiom + ": certificate with " + std::to_string(c->parts.size()) + " part(s)");
				print_certificate(*c, der);
			} else {
				j["not_in_slice"] = detail::to_json(std::get<NotInSlice>(e.result));
				say("  " + e.axiom + ": not in slice (inconclusive)");
				const Axiom* ax = to.find_axiom(e.axiom);
				auto cm = find_countermodel(from, ax->poly, model_pool(from.signature(), opts_.seed));
				if (cm) {
					j["countermodel"] = countermodel_json(*cm);
					say("    countermodel " + cm->label + " violates " + e.axiom);
				} else {
					j["countermodel"] = nullptr;
				}
			}
			entries.push_back(std::move(j));
		}
		return entries;
	}

	void exec(const QueryDecl& q, Json& out)
	{
		Json j = begin(q);
		if (q.kind == "verify" || q.kind == "cert") {
			Variety v = resolve(q.varieties[0]);
			const auto& sig = v.signature();
			std::string der(sig.derivation_name());
			Certificate c;
			if (q.kind == "cert") {
				c = certificate_from_json(read_file(std::filesystem::path(opts_.base_dir) / q.path), sig);
				j["file"] = q.path;
			} else {
				c = certificate_from_decl(q, v);
			}
			auto r = verify_certificate(c, v);
			j["variety"] = v.name();
			j["parts"] = c.parts.size();
			j["residual"] = detail::to_json(r.residual, der);
			finish(j, out, r.ok,
			       q.kind + " " + v.name() + ": " + std::to_string(c.parts.size()) + " part(s), residual " +
			           to_string(r.residual, der));
			return;
		}
		if (q.kind == "derive") {
			Variety v = resolve(q.varieties[0]);
			const auto& sig = v.signature();
			std::string der(sig.derivation_name());
			auto vars = VariableMap::scoped({&*q.target}, sig, macros_);
			Poly target = eval_expr(*q.target, sig, &vars, macros_);
			int w = dweight_for(q, target.weight());
			auto result = derive(target, v, degree_for(q), w, instance_options());
			j["variety"] = v.name();
			j["target"] = detail::to_json(target, der);
			j["dweight"] = w;
			if (const auto* c = std::get_if<Certificate>(&result)) {
				j["certificate"] = detail::to_json(*c, der);
				finish(j, out, true,
				       "derive " + v.name() + " : " + poly_text(target, names_of(vars), der) + ": certificate with " +
				           std::to_string(c->parts.size()) + " part(s)");
				print_certificate(*c, der);
			} else {
				j["not_in_slice"] = detail::to_json(std::get<NotInSlice>(result));
				finish(j, out, false, "derive " + v.name() + " : " + poly_text(target, names_of(vars), der) +
				                          ": not in slice (inconclusive)");
			}
			return;
		}
		if (q.kind == "implies" || q.kind == "equivalent") {
			Variety a = resolve(q.varieties[0]), b = resolve(q.varieties[1]);
			int n = degree_for(q);
			int w = dweight_for(q, 1);
			j["from"] = a.name();
			j["to"] = b.name();
			j["dweight"] = w;
			say((q.kind == "implies" ? "derive " + a.name() + " => " + b.name()
			                         : "equivalent " + a.name() + " " + b.name()) +
			    ":");
			auto fwd = check_implication(a, b, n, w, instance_options());
			j["forward"] = implication_json(fwd, a, b);
			bool ok = fwd.all_derived();
			if (q.kind == "equivalent") {
				auto back = check_implication(b, a, n, w, instance_options());
				j["backward"] = implication_json(back, b, a);
				ok = ok && back.all_derived();
			}
			finish(j, out, ok,
			       q.kind == "implies" ? a.name() + " => " + b.name() : a.name() + " <=> " + b.name());
			return;
		}
		if (q.kind == "model-check") {
			TableAlgebra& m = model(q.model);
			Variety v = resolve(q.varieties[0]);
			auto r = check_axioms(m, v);
			j["model"] = q.model;
			j["variety"] = v.name();
			j["check"] = detail::to_json(r, m.dim());
			std::string detail_text;
			if (!r.ok) {
				detail_text = ": " + r.failed + " fails at (";
				for (std::size_t i = 0; i < r.tuple.size(); ++i)
					detail_text += (i ? ", e" : "e") + std::to_string(r.tuple[i]);
				detail_text += "), value " + to_string(r.residual);
			}
			finish(j, out, r.ok, "model-check " + q.model + " " + v.name() + detail_text);
			return;
		}
		if (q.kind == "countermodel") {
			Variety v = resolve(q.varieties[0]);
			const auto& sig = v.signature();
			auto vars = VariableMap::scoped({&*q.target}, sig, macros_);
			Poly target = eval_expr(*q.target, sig, &vars, macros_);
			std::vector<LabeledModel> pool;
			for (const auto& [name, m] : models_)
				pool.push_back({name, m});
			auto more = model_pool(sig, opts_.seed);
			pool.insert(pool.end(), more.begin(), more.end());
			auto cm = find_countermodel(v, target, pool);
			j["variety"] = v.name();
			j["target"] = detail::to_json(target, sig.derivation_name());
			j["countermodel"] = cm ? countermodel_json(*cm) : Json(nullptr);
			finish(j, out, cm.has_value(),
			       "countermodel " + v.name() + ": " + (cm ? "found in " + cm->label : "none in the pool"));
			return;
		}
		if (q.kind == "polarize" || q.kind == "depolarize") {
			bool pol = q.kind == "polarize";
			auto sig = pol ? depolarized_signature() : polarized_signature();
			auto vars = VariableMap::scoped({&*q.target}, sig, macros_);
			Poly p = eval_expr(*q.target, sig, &vars, macros_);
			Poly r = pol ? polarize(p) : depolarize(p);
			std::string text = poly_text(r, names_of(vars), "D");
			j["input"] = poly_text(p, names_of(vars), "D");
			j["result"] = text;
			finish(j, out, true, q.kind + ": " + text);
			return;
		}
		if (q.kind == "ito") {
			TableAlgebra& m = model(q.model);
			SearchOptions so;
			so.seed = opts_.seed;
			auto r = run_ito(q.model, m, opts_.noncommutative, so);
			j["model"] = q.model;
			j["noncommutative"] = opts_.noncommutative;
			j["certified"] = r.certified;
			j["decompositions"] = r.decompositions;
			j["metatrivial"] = r.metatrivial;
			j["violations"] = r.violations;
			finish(j, out, r.violations.empty(),
			       "ito " + q.model + ": " + std::to_string(r.decompositions) + " decomposition(s), " +
			           (r.metatrivial ? "metatrivial" : "not metatrivial") + ", " +
			           std::to_string(r.violations.size()) + " violation(s)");
			for (const auto& v : r.violations)
				say("    " + v);
			return;
		}
		if (q.kind == "ito-pool") {
			auto r = run_ito_pool(q.count, opts_.seed, opts_.noncommutative);
			j["models"] = r.models.size();
			j["noncommutative"] = r.noncommutative;
			j["decompositions"] = r.decompositions;
			j["violations"] = r.violations;
			Json per = Json::array();
			for (const auto& m : r.models) {
				Json e;
				e["model"] = m.label;
				e["decompositions"] = m.decompositions;
				e["metatrivial"] = m.metatrivial;
				e["violations"] = m.violations;
				per.push_back(std::move(e));
			}
			j["pool"] = std::move(per);
			finish(j, out, r.ok(),
			       "ito pool " + std::to_string(r.models.size()) + " model(s): " + std::to_string(r.decompositions) +
			           " decomposition(s), " + std::to_string(r.violations) + " violation(s)");
			return;
		}
		throw Error("unknown query kind '" + q.kind + "'");
	}

	Certificate certificate_from_decl(const QueryDecl& q, const Variety& v)
	{
		const auto& sig = v.signature();
		std::vector<const Expr*> scope{&*q.target};
		for (const auto& p : q.parts) {
			for (const auto& a : p.args)
				scope.push_back(&a);
			if (p.context)
				scope.push_back(&*p.context);
		}
		auto vars = VariableMap::scoped(scope, sig, macros_);
		Certificate c;
		c.target = eval_expr(*q.target, sig, &vars, macros_);
		auto single = [&](const Expr& e, const std::string& what) {
			Poly p = eval_expr(e, sig, &vars, macros_);
			if (p.size() != 1)
				throw ParseError(what + " must be a single term", e.pos.line, e.pos.column);
			return *p.begin();
		};
		for (const auto& pd : q.parts) {
			const Axiom* ax = v.find_axiom(pd.axiom);
			if (!ax)
				throw Error("variety '" + v.name() + "' has no axiom '" + pd.axiom + "'");
			std::size_t arity = ax->poly.variables().size();
			if (pd.args.size() != arity)
				throw Error("axiom '" + pd.axiom + "' takes " + std::to_string(arity) + " argument(s), got " +
				            std::to_string(pd.args.size()));
			CertificatePart part;
			part.coeff = pd.coeff;
			part.axiom = pd.axiom;
			for (std::size_t i = 0; i < pd.args.size(); ++i) {
				auto [t, k] = single(pd.args[i], "substitution image");
				part.coeff *= k;
				part.sigma.emplace(static_cast<int>(i) + 1, t);
			}
			if (pd.context) {
				auto [t, k] = single(*pd.context, "context");
				if (!t.contains_hole())
					throw ParseError("context must contain the hole '_'", pd.context->pos.line, pd.context->pos.column);
				part.coeff *= k;
				part.context = t;
			}
			part.dshift = pd.dshift;
			c.parts.push_back(std::move(part));
		}
		return c;
	}

	RunOptions opts_;
	std::map<std::string, Variety> varieties_;
	std::map<std::string, TableAlgebra> models_;
	MacroTable macros_;
	std::ostringstream text_;
	int line_ = 0;
	bool failed_ = false;
};

} // namespace

RunResult run_script(const Script& script, const RunOptions& options)
{
	return Runner(options).run(script);
}

RunResult run_source(std::string_view text, const RunOptions& options)
{
	Script s;
	try {
		s = parse_script(text);
	} catch (const ParseError& e) {
		RunResult r;
		r.exit_code = exit_usage;
		r.text = std::string("parse error: ") + e.what() + "\n";
		Json j;
		j["ok"] = false;
		j["parse_error"] = e.what();
		r.json = j.dump(2) + "\n";
		return r;
	}
	return run_script(s, options);
}

} // namespace gpforge
