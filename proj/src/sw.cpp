#include "finpres/sw.h"

#include <sstream>
#include <stdexcept>

namespace finpres::envelop {

CommPoly CommPoly::constant(const Rational &c) { return monomial(0, 0, 0, c); }

CommPoly CommPoly::monomial(int dx, int dy, int dz, const Rational &c)
{
	CommPoly p;
	p.add_term({dx, dy, dz}, c);
	return p;
}

Rational CommPoly::constant_term() const
{
	auto it = terms_.find({0, 0, 0});
	return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add_term(const CommMonomial &m, const Rational &c)
{
	for (int e : m)
		if (e < 0)
			throw std::invalid_argument("negative exponent in a polynomial");
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (inserted)
		return;
	it->second += c;
	if (it->second == 0)
		terms_.erase(it);
}

CommPoly CommPoly::operator+(const CommPoly &o) const
{
	CommPoly r = *this;
	for (const auto &[m, c] : o.terms_)
		r.add_term(m, c);
	return r;
}

CommPoly CommPoly::operator-(const CommPoly &o) const
{
	CommPoly r = *this;
	for (const auto &[m, c] : o.terms_)
		r.add_term(m, -c);
	return r;
}

CommPoly CommPoly::operator*(const CommPoly &o) const
{
	CommPoly r;
	for (const auto &[m1, c1] : terms_)
		for (const auto &[m2, c2] : o.terms_)
			r.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
	return r;
}

CommPoly CommPoly::scaled(const Rational &c) const
{
	CommPoly r;
	for (const auto &[m, coeff] : terms_)
		r.add_term(m, coeff * c);
	return r;
}

std::string CommPoly::str() const
{
	if (terms_.empty())
		return "0";
	static const char names[3] = {'x', 'y', 'z'};
	std::ostringstream out;
	bool first = true;
	for (const auto &[m, c] : terms_)
	{
		Rational mag = abs(c);
		out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
		first = false;
		std::string mono;
		for (int v = 0; v < 3; ++v)
		{
			if (m[static_cast<std::size_t>(v)] == 0)
				continue;
			mono += names[v];
			if (m[static_cast<std::size_t>(v)] > 1)
				mono += '^' + std::to_string(m[static_cast<std::size_t>(v)]);
		}
		if (mono.empty())
			out << to_string(mag);
		else if (mag == 1)
			out << mono;
		else
			out << to_string(mag) << ' ' << mono;
	}
	return out.str();
}

SWMatrix SWMatrix::operator*(const SWMatrix &o) const
{
	SWMatrix r;
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
	return r;
}

std::string SWMatrix::str() const
{
	return "[[" + e[0].str() + ", " + e[1].str() + "], [" + e[2].str() + ", " + e[3].str() + "]]";
}

namespace {

bool yz_degree_at_least(const CommPoly &f, int bound)
{
	for (const auto &[m, c] : f.terms())
		if (m[1] + m[2] < bound)
			return false;
	return true;
}

} // namespace

bool sw_in_I(const CommPoly &f) { return yz_degree_at_least(f, 1); }

bool sw_in_I2(const CommPoly &f) { return yz_degree_at_least(f, 2); }

bool sw_in_F_plus_I2(const CommPoly &f) { return sw_in_I2(f - CommPoly::constant(f.constant_term())); }

bool sw_matrix_in_R(const SWMatrix &m)
{
	return sw_in_F_plus_I2(m(0, 0)) && sw_in_I(m(0, 1)) && sw_in_I(m(1, 0));
}

} // namespace finpres::envelop
