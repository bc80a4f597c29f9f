#include "gpforge/dsl.hpp"

#include "gpforge/error.hpp"
#include "gpforge/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gpforge {

bool operator==(const Expr& a, const Expr& b)
{
	return a.kind == b.kind && a.name == b.name && a.args == b.args && a.coeffs == b.coeffs;
}

namespace {

enum class Tok { ident, number, string, punct, end };

struct Token {
	Tok kind;
	std::string text;
	SourcePos pos;
};

bool ident_start(char c)
{
	return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
	return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
}

std::vector<Token> lex(std::string_view src)
{
	std::vector<Token> out;
	int line = 1, col = 1;
	std::size_t i = 0;
	auto advance = [&](std::size_t n) {
		for (std::size_t k = 0; k < n; ++k, ++i) {
			if (src[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
	};
	while (i < src.size()) {
		char c = src[i];
		if (std::isspace(static_cast<unsigned char>(c))) {
			advance(1);
			continue;
		}
		if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
			while (i < src.size() && src[i] != '\n')
				advance(1);
			continue;
		}
		SourcePos pos{line, col};
		if (ident_start(c)) {
			std::size_t j = i;
			while (j < src.size() && ident_char(src[j]))
				++j;
			out.push_back({Tok::ident, std::string(src.substr(i, j - i)), pos});
			advance(j - i);
		} else if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t j = i;
			while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
				++j;
			out.push_back({Tok::number, std::string(src.substr(i, j - i)), pos});
			advance(j - i);
		} else if (c == '"') {
			std::size_t j = i + 1;
			while (j < src.size() && src[j] != '"' && src[j] != '\n')
				++j;
			if (j >= src.size() || src[j] != '"')
				throw ParseError("unterminated string literal", pos.line, pos.column);
			out.push_back({Tok::string, std::string(src.substr(i + 1, j - i - 1)), pos});
			advance(j + 1 - i);
		} else if (c == '=' && i + 1 < src.size() && src[i + 1] == '>') {
			out.push_back({Tok::punct, "=>", pos});
			advance(2);
		} else if (std::string_view("{}();:,=*+-/").find(c) != std::string_view::npos) {
			out.push_back({Tok::punct, std::string(1, c), pos});
			advance(1);
		} else {
			throw ParseError(std::string("unexpected character '") + c + "'", pos.line, pos.column);
		}
	}
	out.push_back({Tok::end, "", {line, col}});
	return out;
}

class Parser {
public:
	explicit Parser(std::string_view src) : toks_(lex(src)) {}

	Script script()
	{
		Script s;
		while (!at_end())
			s.statements.push_back(statement());
		return s;
	}

	Expr standalone_expr()
	{
		Expr e = expr();
		if (!at_end())
			fail("unexpected '" + peek().text + "' after expression");
		return e;
	}

private:
	const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
	bool at_end() const { return peek().kind == Tok::end; }
	const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

	[[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
	[[noreturn]] static void fail_at(const Token& t, const std::string& msg)
	{
		throw ParseError(msg, t.pos.line, t.pos.column);
	}

	bool is_punct(std::string_view p, std::size_t k = 0) const
	{
		return peek(k).kind == Tok::punct && peek(k).text == p;
	}
	bool is_word(std::string_view w, std::size_t k = 0) const
	{
		return peek(k).kind == Tok::ident && peek(k).text == w;
	}
	bool accept(std::string_view p)
	{
		if (!is_punct(p))
			return false;
		next();
		return true;
	}
	void expect(std::string_view p)
	{
		if (!is_punct(p))
			fail("expected '" + std::string(p) + "'" + found());
		next();
	}
	void expect_word(std::string_view w)
	{
		if (!is_word(w))
			fail("expected '" + std::string(w) + "'" + found());
		next();
	}
	std::string found() const
	{
		return at_end() ? " at end of input" : ", found '" + peek().text + "'";
	}
	std::string ident(std::string_view what)
	{
		if (peek().kind != Tok::ident)
			fail("expected " + std::string(what) + found());
		return next().text;
	}
	int integer(std::string_view what)
	{
		if (peek().kind != Tok::number)
			fail("expected " + std::string(what) + found());
		const Token& t = next();
		if (t.text.size() > 9)
			fail_at(t, "number too large");
		return std::stoi(t.text);
	}
	// NUMBER ['/' NUMBER], the slash only when a number follows.
	Rational unsigned_rational()
	{
		const Token& t = next();
		std::string text = t.text;
		if (is_punct("/") && peek(1).kind == Tok::number) {
			next();
			text += "/" + next().text;
		}
		try {
			return parse_rational(text);
		} catch (const ParseError& e) {
			fail_at(t, e.what());
		}
	}
	Rational signed_rational()
	{
		bool neg = false;
		if (accept("-"))
			neg = true;
		if (peek().kind != Tok::number)
			fail("expected a number" + found());
		Rational q = unsigned_rational();
		return neg ? Rational(-q) : q;
	}

	Expr expr()
	{
		Expr sum;
		sum.kind = Expr::Kind::sum;
		sum.pos = peek().pos;
		bool first = true;
		while (true) {
			Rational sign = 1;
			if (is_punct("-") || is_punct("+")) {
				// "a + -b" is allowed, so signs may stack
				while (is_punct("-") || is_punct("+"))
					if (next().text == "-")
						sign = -sign;
			} else if (!first) {
				break;
			}
			term(sum, sign);
			first = false;
			if (!is_punct("+") && !is_punct("-"))
				break;
		}
		return sum;
	}

	void term(Expr& sum, const Rational& sign)
	{
		if (peek().kind == Tok::number) {
			const Token& start = peek();
			Rational c = unsigned_rational();
			if (accept("*")) {
				sum.coeffs.push_back(sign * c);
				sum.args.push_back(atom());
				return;
			}
			if (c != 0)
				fail_at(start, "constant term " + to_display_string(c) + " is not a polynomial in the operations");
			return;
		}
		sum.coeffs.push_back(sign);
		sum.args.push_back(atom());
	}

	Expr atom()
	{
		Expr e;
		e.pos = peek().pos;
		if (accept("(")) {
			e = expr();
			expect(")");
			return e;
		}
		if (peek().kind != Tok::ident)
			fail("expected an expression" + found());
		e.name = next().text;
		if (e.name == "_") {
			e.kind = Expr::Kind::hole;
			e.name.clear();
			return e;
		}
		if (!accept("(")) {
			e.kind = Expr::Kind::name;
			return e;
		}
		e.kind = Expr::Kind::call;
		e.args = call_args();
		return e;
	}

	// After '(' up to and including ')'.
	std::vector<Expr> call_args()
	{
		std::vector<Expr> args;
		if (accept(")"))
			return args;
		while (true) {
			args.push_back(expr());
			if (accept(")"))
				return args;
			if (!is_punct(","))
				fail("expected ',' or ')'" + found());
			const Token& comma = next();
			if (is_punct(")") || is_punct(","))
				fail_at(comma, "expected an expression after ','");
		}
	}

	VarietyRef variety_ref()
	{
		VarietyRef r;
		r.pos = peek().pos;
		if (peek().kind == Tok::string) {
			r.builtin = true;
			r.name = next().text;
		} else {
			r.name = ident("a variety name");
		}
		return r;
	}

	Statement statement()
	{
		Statement s;
		s.pos = peek().pos;
		if (is_word("variety"))
			s.node = variety();
		else if (is_word("poly"))
			s.node = poly();
		else if (is_word("model"))
			s.node = model();
		else if (is_word("query"))
			s.node = query();
		else
			fail("expected 'variety', 'poly', 'model' or 'query'" + found());
		return s;
	}

	VarietyDecl variety()
	{
		next();
		VarietyDecl v;
		if (peek().kind == Tok::string)
			v.name = next().text;
		else
			v.name = ident("a variety name");
		if (accept("=")) {
			std::string src = ident("'builtin', 'polarize', 'depolarize' or 'drop_derivations'");
			if (src == "builtin") {
				if (peek().kind != Tok::string)
					fail("expected a quoted built-in name" + found());
				VarietyRef r;
				r.pos = peek().pos;
				r.builtin = true;
				r.name = next().text;
				v.from = r;
			} else if (src == "polarize" || src == "depolarize" || src == "drop_derivations") {
				v.from = variety_ref();
			} else {
				fail_at(toks_[pos_ - 1], "unknown variety source '" + src + "'");
			}
			v.source = src;
			expect(";");
			return v;
		}
		expect("{");
		while (!accept("}")) {
			std::string item = ident("'op', 'der', 'axiom' or 'include'");
			if (item == "op") {
				OpDecl op;
				op.name = ident("an operation name");
				expect(":");
				op.arity = integer("an arity");
				if (peek().kind == Tok::ident) {
					const Token& t = next();
					try {
						op.symmetry = parse_symmetry(t.text);
					} catch (const Error& e) {
						fail_at(t, e.what());
					}
				}
				v.ops.push_back(std::move(op));
			} else if (item == "der") {
				v.derivations.push_back(ident("a derivation name"));
			} else if (item == "axiom") {
				AxiomDecl ax;
				ax.name = ident("an axiom name");
				expect(":");
				ax.lhs = expr();
				if (accept("="))
					ax.rhs = expr();
				v.axioms.push_back(std::move(ax));
			} else if (item == "include") {
				v.includes.push_back(variety_ref());
			} else {
				fail_at(toks_[pos_ - 1], "unknown variety item '" + item + "'");
			}
			expect(";");
		}
		accept(";");
		return v;
	}

	PolyDecl poly()
	{
		next();
		PolyDecl p;
		p.name = ident("a polynomial name");
		expect("(");
		if (!accept(")")) {
			while (true) {
				p.params.push_back(ident("a parameter name"));
				if (accept(")"))
					break;
				expect(",");
			}
		}
		expect("=");
		p.body = expr();
		expect(";");
		return p;
	}

	ModelDecl model()
	{
		next();
		ModelDecl m;
		m.name = ident("a model name");
		expect("=");
		m.kind = ident("a model constructor");
		expect("(");
		if (!accept(")")) {
			while (true) {
				ModelArg a;
				if (peek().kind == Tok::ident && is_punct("=", 1)) {
					a.key = next().text;
					next();
				}
				if (peek().kind == Tok::number || is_punct("-")) {
					a.kind = ModelArg::Kind::number;
					a.number = signed_rational();
				} else if (peek().kind == Tok::string) {
					a.kind = ModelArg::Kind::string;
					a.text = next().text;
				} else {
					a.kind = ModelArg::Kind::ident;
					a.text = ident("a model argument");
				}
				m.args.push_back(std::move(a));
				if (accept(")"))
					break;
				expect(",");
			}
		}
		expect(";");
		return m;
	}

	void query_options(QueryDecl& q)
	{
		while (is_word("degree") || is_word("dweight")) {
			std::string key = next().text;
			q.options[key] = integer("a number");
		}
	}

	QueryDecl query()
	{
		next();
		QueryDecl q;
		const Token& kind_tok = peek();
		q.kind = ident("a query kind");
		if (q.kind == "model" && is_punct("-") && is_word("check", 1)) {
			next();
			next();
			q.kind = "model-check";
		}
		if (q.kind == "verify") {
			q.varieties.push_back(variety_ref());
			expect("{");
			while (!accept("}")) {
				std::string item = ident("'target' or 'part'");
				if (item == "target") {
					expect(":");
					q.target = expr();
				} else if (item == "part") {
					PartDecl part;
					if (peek().kind == Tok::number || is_punct("-"))
						part.coeff = signed_rational();
					part.axiom = ident("an axiom name");
					expect("(");
					part.args = call_args();
					if (is_word("in")) {
						next();
						part.context = expr();
					}
					if (is_word("dshift")) {
						next();
						part.dshift = integer("a dshift count");
					}
					q.parts.push_back(std::move(part));
				} else {
					fail_at(toks_[pos_ - 1], "unknown verify item '" + item + "'");
				}
				expect(";");
			}
			if (!q.target)
				fail_at(kind_tok, "verify query needs a target");
			accept(";");
			return q;
		}
		if (q.kind == "cert") {
			q.varieties.push_back(variety_ref());
			if (peek().kind != Tok::string)
				fail("expected a quoted file name" + found());
			q.path = next().text;
		} else if (q.kind == "derive") {
			q.varieties.push_back(variety_ref());
			if (accept("=>")) {
				q.kind = "implies";
				q.varieties.push_back(variety_ref());
			} else {
				expect(":");
				q.target = expr();
			}
			query_options(q);
		} else if (q.kind == "equivalent") {
			q.varieties.push_back(variety_ref());
			q.varieties.push_back(variety_ref());
			query_options(q);
		} else if (q.kind == "model-check") {
			q.model = ident("a model name");
			q.varieties.push_back(variety_ref());
		} else if (q.kind == "countermodel") {
			q.varieties.push_back(variety_ref());
			expect(":");
			q.target = expr();
		} else if (q.kind == "polarize" || q.kind == "depolarize") {
			q.target = expr();
		} else if (q.kind == "ito") {
			if (is_word("pool")) {
				next();
				q.kind = "ito-pool";
				q.count = integer("a model count");
			} else {
				q.model = ident("a model name");
			}
		} else {
			fail_at(kind_tok, "unknown query kind '" + q.kind + "'");
		}
		expect(";");
		return q;
	}

	std::vector<Token> toks_;
	std::size_t pos_ = 0;
};

bool is_identifier(std::string_view s)
{
	if (s.empty() || !ident_start(s[0]))
		return false;
	return std::all_of(s.begin(), s.end(), ident_char);
}

std::string print_ref(const VarietyRef& r)
{
	return r.builtin ? "\"" + r.name + "\"" : r.name;
}

std::string print_name(const std::string& n)
{
	return is_identifier(n) ? n : "\"" + n + "\"";
}

std::string print_atom(const Expr& e)
{
	switch (e.kind) {
	case Expr::Kind::hole:
		return "_";
	case Expr::Kind::name:
		return e.name;
	case Expr::Kind::call: {
		std::string s = e.name + "(";
		for (std::size_t i = 0; i < e.args.size(); ++i)
			s += (i ? ", " : "") + print_expr(e.args[i]);
		return s + ")";
	}
	case Expr::Kind::sum:
		return "(" + print_expr(e) + ")";
	}
	return "";
}

std::string print_model_arg(const ModelArg& a)
{
	std::string s = a.key.empty() ? "" : a.key + "=";
	switch (a.kind) {
	case ModelArg::Kind::number:
		return s + to_display_string(a.number);
	case ModelArg::Kind::string:
		return s + "\"" + a.text + "\"";
	case ModelArg::Kind::ident:
		return s + a.text;
	}
	return s;
}

std::string print_options(const QueryDecl& q)
{
	std::string s;
	for (const auto& [k, v] : q.options)
		s += " " + k + " " + std::to_string(v);
	return s;
}

} // namespace

namespace {

// Unknown variety and model names are reported at parse time.
void resolve_names(const Script& script)
{
	std::set<std::string> varieties, models;
	auto check_ref = [&](const VarietyRef& r) {
		if (r.builtin || varieties.count(r.name))
			return;
		throw ParseError("unknown variety '" + r.name + "'", r.pos.line, r.pos.column);
	};
	auto check_model = [&](const std::string& name, const SourcePos& pos) {
		if (!models.count(name))
			throw ParseError("unknown model '" + name + "'", pos.line, pos.column);
	};
	static const std::set<std::string> model_transforms{"derived_bracket", "zinbiel_star", "zinbiel_polarization",
	                                                     "polarize", "depolarize"};
	for (const auto& st : script.statements) {
		if (const auto* v = std::get_if<VarietyDecl>(&st.node)) {
			if (v->from && v->source != "builtin")
				check_ref(*v->from);
			for (const auto& r : v->includes)
				check_ref(r);
			varieties.insert(v->name);
		} else if (const auto* m = std::get_if<ModelDecl>(&st.node)) {
			if (model_transforms.count(m->kind))
				for (const auto& a : m->args)
					if (a.kind == ModelArg::Kind::ident && (a.key.empty() || a.key == "model"))
						check_model(a.text, st.pos);
			models.insert(m->name);
		} else if (const auto* q = std::get_if<QueryDecl>(&st.node)) {
			for (const auto& r : q->varieties)
				check_ref(r);
			if (!q->model.empty())
				check_model(q->model, st.pos);
		}
	}
}

} // namespace

Script parse_script(std::string_view text)
{
	Script s = Parser(text).script();
	resolve_names(s);
	return s;
}

Expr parse_expr(std::string_view text)
{
	return Parser(text).standalone_expr();
}

std::string print_expr(const Expr& e)
{
	if (e.kind != Expr::Kind::sum)
		return print_atom(e);
	if (e.args.empty())
		return "0";
	std::string s;
	for (std::size_t i = 0; i < e.args.size(); ++i) {
		const Rational& c = e.coeffs[i];
		Rational a = abs(c);
		if (i == 0)
			s += c < 0 ? "-" : "";
		else
			s += c < 0 ? " - " : " + ";
		if (a != 1)
			s += to_display_string(a) + "*";
		s += print_atom(e.args[i]);
	}
	return s;
}

std::string print_statement(const Statement& st)
{
	return std::visit(
	    [](const auto& n) -> std::string {
		    using T = std::decay_t<decltype(n)>;
		    if constexpr (std::is_same_v<T, VarietyDecl>) {
			    std::string s = "variety " + print_name(n.name);
			    if (!n.source.empty())
				    return s + " = " + n.source + " " + print_ref(*n.from) + ";";
			    s += " {\n";
			    for (const auto& r : n.includes)
				    s += "  include " + print_ref(r) + ";\n";
			    for (const auto& o : n.ops) {
				    s += "  op " + o.name + " : " + std::to_string(o.arity);
				    if (o.arity == 2)
					    s += " " + std::string(to_string(o.symmetry));
				    s += ";\n";
			    }
			    for (const auto& d : n.derivations)
				    s += "  der " + d + ";\n";
			    for (const auto& a : n.axioms) {
				    s += "  axiom " + a.name + " : " + print_expr(a.lhs);
				    if (!(a.rhs.kind == Expr::Kind::sum && a.rhs.args.empty()))
					    s += " = " + print_expr(a.rhs);
				    s += ";\n";
			    }
			    return s + "}";
		    } else if constexpr (std::is_same_v<T, PolyDecl>) {
			    std::string s = "poly " + n.name + "(";
			    for (std::size_t i = 0; i < n.params.size(); ++i)
				    s += (i ? ", " : "") + n.params[i];
			    return s + ") = " + print_expr(n.body) + ";";
		    } else if constexpr (std::is_same_v<T, ModelDecl>) {
			    std::string s = "model " + n.name + " = " + n.kind + "(";
			    for (std::size_t i = 0; i < n.args.size(); ++i)
				    s += (i ? ", " : "") + print_model_arg(n.args[i]);
			    return s + ");";
		    } else {
			    const QueryDecl& q = n;
			    if (q.kind == "verify") {
				    std::string s = "query verify " + print_ref(q.varieties[0]) + " {\n";
				    s += "  target : " + print_expr(*q.target) + ";\n";
				    for (const auto& p : q.parts) {
					    s += "  part ";
					    if (p.coeff != 1)
						    s += to_display_string(p.coeff) + " ";
					    s += p.axiom + "(";
					    for (std::size_t i = 0; i < p.args.size(); ++i)
						    s += (i ? ", " : "") + print_expr(p.args[i]);
					    s += ")";
					    if (p.context)
						    s += " in " + print_expr(*p.context);
					    if (p.dshift)
						    s += " dshift " + std::to_string(p.dshift);
					    s += ";\n";
				    }
				    return s + "}";
			    }
			    if (q.kind == "cert")
				    return "query cert " + print_ref(q.varieties[0]) + " \"" + q.path + "\";";
			    if (q.kind == "derive")
				    return "query derive " + print_ref(q.varieties[0]) + " : " + print_expr(*q.target) +
				           print_options(q) + ";";
			    if (q.kind == "implies")
				    return "query derive " + print_ref(q.varieties[0]) + " => " + print_ref(q.varieties[1]) +
				           print_options(q) + ";";
			    if (q.kind == "equivalent")
				    return "query equivalent " + print_ref(q.varieties[0]) + " " + print_ref(q.varieties[1]) +
				           print_options(q) + ";";
			    if (q.kind == "model-check")
				    return "query model-check " + q.model + " " + print_ref(q.varieties[0]) + ";";
			    if (q.kind == "countermodel")
				    return "query countermodel " + print_ref(q.varieties[0]) + " : " + print_expr(*q.target) + ";";
			    if (q.kind == "polarize" || q.kind == "depolarize")
				    return "query " + q.kind + " " + print_expr(*q.target) + ";";
			    if (q.kind == "ito")
				    return "query ito " + q.model + ";";
			    if (q.kind == "ito-pool")
				    return "query ito pool " + std::to_string(q.count) + ";";
			    throw Error("cannot print query kind '" + q.kind + "'");
		    }
	    },
	    st.node);
}

std::string print_script(const Script& s)
{
	std::string out;
	for (const auto& st : s.statements)
		out += print_statement(st) + "\n";
	return out;
}

namespace {

void collect_names(const Expr& e, std::set<std::string>& out)
{
	if (e.kind == Expr::Kind::name)
		out.insert(e.name);
	for (const auto& a : e.args)
		collect_names(a, out);
}

Expr substitute_params(const Expr& e, const std::map<std::string, const Expr*>& bind)
{
	if (e.kind == Expr::Kind::name) {
		auto it = bind.find(e.name);
		if (it != bind.end())
			return *it->second;
	}
	Expr out = e;
	for (auto& a : out.args)
		a = substitute_params(a, bind);
	return out;
}

[[noreturn]] void fail_at(const Expr& e, const std::string& msg)
{
	throw ParseError(msg, e.pos.line, e.pos.column);
}

Poly eval(const Expr& e, const OperationSignature& sig, const VariableMap* vars, const MacroTable& macros, int depth)
{
	if (depth > 64)
		fail_at(e, "macro expansion is nested too deeply");
	switch (e.kind) {
	case Expr::Kind::sum: {
		Poly out;
		for (std::size_t i = 0; i < e.args.size(); ++i)
			if (e.coeffs[i] != 0)
				out += e.coeffs[i] * eval(e.args[i], sig, vars, macros, depth);
		return out;
	}
	case Expr::Kind::hole:
		return Poly(Term::hole());
	case Expr::Kind::name: {
		if (sig.find_op(e.name) || sig.is_derivation(e.name))
			fail_at(e, "operation '" + e.name + "' used without arguments");
		int idx = -1;
		if (vars) {
			auto it = vars->index.find(e.name);
			if (it != vars->index.end())
				idx = it->second;
		} else {
			idx = canonical_var_index(e.name);
		}
		if (idx < 1)
			fail_at(e, "unknown variable '" + e.name + "'");
		return Poly(Term::var(idx));
	}
	case Expr::Kind::call: {
		if (sig.is_derivation(e.name)) {
			if (e.args.size() != 1)
				fail_at(e, "derivation '" + e.name + "' takes one argument");
			return d_apply(eval(e.args[0], sig, vars, macros, depth), 1, sig);
		}
		if (const Operation* op = sig.find_op(e.name)) {
			if (static_cast<int>(e.args.size()) != op->arity)
				fail_at(e, "operation '" + e.name + "' expects " + std::to_string(op->arity) + " argument(s), got " +
				               std::to_string(e.args.size()));
			std::vector<Poly> args;
			for (const auto& a : e.args)
				args.push_back(eval(a, sig, vars, macros, depth));
			return apply_op(sig, e.name, args);
		}
		auto m = macros.find(e.name);
		if (m != macros.end()) {
			const PolyDecl& decl = m->second;
			if (decl.params.size() != e.args.size())
				fail_at(e, "'" + e.name + "' expects " + std::to_string(decl.params.size()) + " argument(s), got " +
				               std::to_string(e.args.size()));
			std::map<std::string, const Expr*> bind;
			for (std::size_t i = 0; i < e.args.size(); ++i)
				bind[decl.params[i]] = &e.args[i];
			return eval(substitute_params(decl.body, bind), sig, vars, macros, depth + 1);
		}
		fail_at(e, "unknown operation '" + e.name + "'");
	}
	}
	return {};
}

} // namespace

VariableMap VariableMap::scoped(const std::vector<const Expr*>& exprs, const OperationSignature&, const MacroTable&)
{
	std::set<std::string> names;
	for (const Expr* e : exprs)
		collect_names(*e, names);
	std::vector<std::string> sorted(names.begin(), names.end());
	std::stable_sort(sorted.begin(), sorted.end(),
	                 [](const std::string& a, const std::string& b) { return a.size() < b.size(); });
	VariableMap m;
	for (std::size_t i = 0; i < sorted.size(); ++i)
		m.index.emplace(sorted[i], static_cast<int>(i) + 1);
	return m;
}

Poly eval_expr(const Expr& e, const OperationSignature& sig, const VariableMap* vars, const MacroTable& macros)
{
	return eval(e, sig, vars, macros, 0);
}

Poly parse_poly(std::string_view text, const OperationSignature& sig)
{
	return eval_expr(parse_expr(text), sig);
}

std::string render_variety(const Variety& v)
{
	const auto& sig = v.signature();
	std::string der(sig.derivation_name());
	std::string s = "variety " + print_name(v.name()) + " {\n";
	for (const auto& o : sig.ops()) {
		s += "  op " + o.name + " : " + std::to_string(o.arity);
		if (o.arity == 2)
			s += " " + std::string(to_string(o.symmetry));
		s += ";\n";
	}
	for (const auto& d : sig.derivations())
		s += "  der " + d + ";\n";
	for (const auto& a : v.axioms())
		s += "  axiom " + a.name + " : " + to_string(a.poly, der) + ";\n";
	return s + "}\n";
}

} // namespace gpforge
