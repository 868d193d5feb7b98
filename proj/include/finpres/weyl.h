#pragma once

#include "finpres/rational.h"

#include <map>
#include <string>

namespace finpres::envelop {

/// Laurent polynomial in x over Q, exponent -> coefficient.
using LaurentQ = std::map<long, Rational>;

std::string laurent_q_str(const LaurentQ &f);
LaurentQ laurent_mul(const LaurentQ &f, const LaurentQ &g);
/// d/dx.
LaurentQ laurent_derivative(const LaurentQ &f);

/// Element sum_k f_k(x) y^k of the Ore extension Q[x, x^-1][y; -d/dx],
/// where y x = x y - 1.
class OreElt
{
public:
	using Terms = std::map<int, LaurentQ>;

	OreElt() = default;
	static OreElt constant(const Rational &c);
	static OreElt x_pow(long n, const Rational &c = 1);
	static OreElt y();
	/// c x^n y^k.
	static OreElt term(long n, int k, const Rational &c = 1);

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational coefficient(long n, int k) const;

	void add_term(long n, int k, const Rational &c);

	OreElt operator+(const OreElt &o) const;
	OreElt operator-(const OreElt &o) const;
	OreElt operator-() const { return scaled(-1); }
	/// ore_mul.
	OreElt operator*(const OreElt &o) const;
	OreElt scaled(const Rational &c) const;

	bool operator==(const OreElt &) const = default;
	std::string str() const;

private:
	Terms terms_;
};

OreElt ore_mul(const OreElt &p, const OreElt &q);
OreElt bracket(const OreElt &p, const OreElt &q);

/// y x^{i+1}.
OreElt witt_theta(long i);
/// [y x^{i+1}, y x^{j+1}] = (i - j) y x^{i+j+1}.
bool witt_bracket_check(long i, long j);

} // namespace finpres::envelop
