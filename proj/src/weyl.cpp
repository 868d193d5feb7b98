#include "finpres/weyl.h"

#include <sstream>
#include <stdexcept>

namespace finpres::envelop {

namespace {

void add_laurent(LaurentQ &f, long e, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = f.try_emplace(e, c);
	if (inserted)
		return;
	it->second += c;
	if (it->second == 0)
		f.erase(it);
}

} // namespace

std::string laurent_q_str(const LaurentQ &f)
{
	if (f.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto &[e, c] : f)
	{
		Rational mag = abs(c);
		out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
		first = false;
		if (e == 0)
		{
			out << to_string(mag);
			continue;
		}
		if (mag != 1)
			out << to_string(mag) << ' ';
		out << 'x';
		if (e != 1)
			out << '^' << e;
	}
	return out.str();
}

LaurentQ laurent_mul(const LaurentQ &f, const LaurentQ &g)
{
	LaurentQ r;
	for (const auto &[e1, c1] : f)
		for (const auto &[e2, c2] : g)
			add_laurent(r, e1 + e2, c1 * c2);
	return r;
}

LaurentQ laurent_derivative(const LaurentQ &f)
{
	LaurentQ r;
	for (const auto &[e, c] : f)
		add_laurent(r, e - 1, c * e);
	return r;
}

// ---------------------------------------------------------------------------

OreElt OreElt::constant(const Rational &c) { return term(0, 0, c); }
OreElt OreElt::x_pow(long n, const Rational &c) { return term(n, 0, c); }
OreElt OreElt::y() { return term(0, 1); }

OreElt OreElt::term(long n, int k, const Rational &c)
{
	OreElt r;
	r.add_term(n, k, c);
	return r;
}

Rational OreElt::coefficient(long n, int k) const
{
	auto it = terms_.find(k);
	if (it == terms_.end())
		return 0;
	auto jt = it->second.find(n);
	return jt == it->second.end() ? Rational(0) : jt->second;
}

void OreElt::add_term(long n, int k, const Rational &c)
{
	if (k < 0)
		throw std::invalid_argument("negative power of y");
	if (c == 0)
		return;
	LaurentQ &f = terms_[k];
	add_laurent(f, n, c);
	if (f.empty())
		terms_.erase(k);
}

OreElt OreElt::operator+(const OreElt &o) const
{
	OreElt r = *this;
	for (const auto &[k, f] : o.terms_)
		for (const auto &[n, c] : f)
			r.add_term(n, k, c);
	return r;
}

OreElt OreElt::operator-(const OreElt &o) const { return *this + (-o); }

OreElt OreElt::scaled(const Rational &c) const
{
	OreElt r;
	for (const auto &[k, f] : terms_)
		for (const auto &[n, coeff] : f)
			r.add_term(n, k, coeff * c);
	return r;
}

OreElt OreElt::operator*(const OreElt &o) const
{
	OreElt r;
	for (const auto &[i, f] : terms_)
		for (const auto &[j, g] : o.terms_)
		{
			// y^i g as sum_k h_k y^k, one y at a time: y h = h y - h'.
			std::map<int, LaurentQ> moved{{0, g}};
			for (int step = 0; step < i; ++step)
			{
				std::map<int, LaurentQ> next;
				for (const auto &[k, h] : moved)
				{
					for (const auto &[e, c] : h)
						add_laurent(next[k + 1], e, c);
					for (const auto &[e, c] : laurent_derivative(h))
						add_laurent(next[k], e, -c);
				}
				moved = std::move(next);
			}
			for (const auto &[k, h] : moved)
				for (const auto &[e, c] : laurent_mul(f, h))
					r.add_term(e, k + j, c);
		}
	return r;
}

std::string OreElt::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto &[k, f] : terms_)
		for (const auto &[n, c] : f)
		{
			Rational mag = abs(c);
			out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
			first = false;
			std::string mono;
			if (n != 0)
				mono += n == 1 ? "x" : "x^" + std::to_string(n);
			if (k != 0)
			{
				if (!mono.empty())
					mono += ' ';
				mono += k == 1 ? "y" : "y^" + std::to_string(k);
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

OreElt ore_mul(const OreElt &p, const OreElt &q) { return p * q; }

OreElt bracket(const OreElt &p, const OreElt &q) { return p * q - q * p; }

OreElt witt_theta(long i) { return OreElt::y() * OreElt::x_pow(i + 1); }

bool witt_bracket_check(long i, long j)
{
	OreElt expected = (OreElt::y() * OreElt::x_pow(i + j + 1)).scaled(Rational(i - j));
	return bracket(witt_theta(i), witt_theta(j)) == expected;
}

} // namespace finpres::envelop
