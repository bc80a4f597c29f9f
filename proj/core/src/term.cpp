#include "gpforge/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gpforge {

namespace {

std::size_t mix(std::size_t h, std::size_t v)
{
	return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

void collect_leaves(const Term& t, std::vector<int>& out)
{
	if (t.is_var()) {
		out.push_back(t.var_index());
		return;
	}
	for (const auto& c : t.children())
		collect_leaves(c, out);
}

} // namespace

Term Term::var(int index, int dpow)
{
	auto n = std::make_shared<Node>();
	n->is_var = true;
	n->var = index;
	n->dpow = dpow;
	n->degree = 1;
	n->weight = dpow;
	n->hash = mix(mix(0x51, static_cast<std::size_t>(index)), static_cast<std::size_t>(dpow));
	return Term(std::move(n));
}

Term Term::apply(std::string op, std::vector<Term> children)
{
	auto n = std::make_shared<Node>();
	n->is_var = false;
	n->hash = mix(0xa7, std::hash<std::string>{}(op));
	n->degree = 0;
	n->weight = 0;
	for (const auto& c : children) {
		n->degree += c.degree();
		n->weight += c.weight();
		n->hash = mix(n->hash, c.hash());
	}
	n->op = std::move(op);
	n->children = std::move(children);
	return Term(std::move(n));
}

std::vector<int> Term::leaves() const
{
	std::vector<int> out;
	collect_leaves(*this, out);
	return out;
}

bool Term::is_multilinear() const
{
	auto l = leaves();
	std::sort(l.begin(), l.end());
	return std::adjacent_find(l.begin(), l.end()) == l.end();
}

bool Term::contains_hole() const
{
	if (is_var())
		return is_hole();
	return std::any_of(children().begin(), children().end(), [](const Term& c) { return c.contains_hole(); });
}

Term Term::with_extra_dpow(int v, int by) const
{
	if (is_var())
		return var_index() == v ? var(v, dpow() + by) : *this;
	std::vector<Term> kids;
	kids.reserve(children().size());
	for (const auto& c : children())
		kids.push_back(c.with_extra_dpow(v, by));
	return apply(op(), std::move(kids));
}

std::strong_ordering operator<=>(const Term& a, const Term& b)
{
	if (a.node_ == b.node_)
		return std::strong_ordering::equal;
	if (a.is_var() != b.is_var())
		return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
	if (a.is_var()) {
		if (auto c = a.var_index() <=> b.var_index(); c != 0)
			return c;
		return a.dpow() <=> b.dpow();
	}
	if (auto c = a.op().compare(b.op()); c != 0)
		return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
	auto ac = a.children(), bc = b.children();
	std::size_t n = std::min(ac.size(), bc.size());
	for (std::size_t i = 0; i < n; ++i)
		if (auto c = ac[i] <=> bc[i]; c != 0)
			return c;
	return ac.size() <=> bc.size();
}

bool operator==(const Term& a, const Term& b)
{
	if (a.node_ == b.node_)
		return true;
	if (a.hash() != b.hash())
		return false;
	return (a <=> b) == 0;
}

std::string var_name(int index)
{
	if (index == hole_index)
		return "_";
	if (index >= 1 && index <= 26)
		return std::string(1, static_cast<char>('a' + index - 1));
	return "x" + std::to_string(index);
}

int canonical_var_index(std::string_view name)
{
	if (name == "_")
		return hole_index;
	if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z')
		return name[0] - 'a' + 1;
	if (name.size() > 1 && name[0] == 'x') {
		int v = 0;
		auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
		if (ec == std::errc() && p == name.data() + name.size() && v > 26)
			return v;
	}
	return -1;
}

std::string to_string(const Term& t, std::string_view derivation)
{
	if (t.is_var()) {
		std::string s = var_name(t.var_index());
		for (int k = 0; k < t.dpow(); ++k)
			s = std::string(derivation) + "(" + s + ")";
		return s;
	}
	std::string s = t.op() + "(";
	for (std::size_t i = 0; i < t.children().size(); ++i) {
		if (i)
			s += ",";
		s += to_string(t.child(i), derivation);
	}
	return s + ")";
}

} // namespace gpforge
