#include "gpforge/poly.hpp"

#include <algorithm>
#include <set>

namespace gpforge {

Poly::Poly(Term t, Rational c)
{
	add_term(t, c);
}

Rational Poly::coeff(const Term& t) const
{
	auto it = terms_.find(t);
	return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Monomial> Poly::monomials() const
{
	std::vector<Monomial> out;
	out.reserve(terms_.size());
	for (const auto& [t, c] : terms_)
		out.push_back({c, t});
	return out;
}

void Poly::add_term(const Term& t, const Rational& c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(t, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

int Poly::max_var() const
{
	int m = 0;
	for (const auto& [t, c] : terms_)
		for (int v : t.leaves())
			m = std::max(m, v);
	return m;
}

std::vector<int> Poly::variables() const
{
	std::set<int> vs;
	for (const auto& [t, c] : terms_)
		for (int v : t.leaves())
			if (v != hole_index)
				vs.insert(v);
	return {vs.begin(), vs.end()};
}

bool Poly::is_multilinear() const
{
	std::vector<int> ref;
	bool first = true;
	for (const auto& [t, c] : terms_) {
		auto l = t.leaves();
		std::sort(l.begin(), l.end());
		if (std::adjacent_find(l.begin(), l.end()) != l.end())
			return false;
		if (first) {
			ref = std::move(l);
			first = false;
		} else if (l != ref) {
			return false;
		}
	}
	return true;
}

int Poly::weight() const
{
	int w = 0;
	for (const auto& [t, c] : terms_)
		w = std::max(w, t.weight());
	return w;
}

int Poly::degree() const
{
	int d = -1;
	for (const auto& [t, c] : terms_) {
		if (d == -1)
			d = t.degree();
		else if (d != t.degree())
			return -1;
	}
	return d;
}

bool Poly::contains_hole() const
{
	return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.contains_hole(); });
}

Poly& Poly::operator+=(const Poly& o)
{
	for (const auto& [t, c] : o.terms_)
		add_term(t, c);
	return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
	for (const auto& [t, c] : o.terms_)
		add_term(t, -c);
	return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [t, v] : terms_)
		v *= c;
	return *this;
}

std::string to_string(const Poly& p, std::string_view derivation)
{
	if (p.is_zero())
		return "0";
	std::string s;
	bool first = true;
	for (const auto& [t, c] : p) {
		Rational a = abs(c);
		if (first)
			s += c < 0 ? "-" : "";
		else
			s += c < 0 ? " - " : " + ";
		if (a != 1)
			s += to_display_string(a) + "*";
		s += to_string(t, derivation);
		first = false;
	}
	return s;
}

} // namespace gpforge
