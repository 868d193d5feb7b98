#pragma once

#include "finpres/rational.h"

#include <array>
#include <map>
#include <string>

namespace finpres::envelop {

/// Exponents (deg_x, deg_y, deg_z).
using CommMonomial = std::array<int, 3>;

/// Element of F[x, y, z].
class CommPoly
{
public:
	using Terms = std::map<CommMonomial, Rational>;

	CommPoly() = default;
	static CommPoly constant(const Rational &c);
	static CommPoly monomial(int dx, int dy, int dz, const Rational &c = 1);
	static CommPoly x() { return monomial(1, 0, 0); }
	static CommPoly y() { return monomial(0, 1, 0); }
	static CommPoly z() { return monomial(0, 0, 1); }

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational constant_term() const;

	void add_term(const CommMonomial &m, const Rational &c);

	CommPoly operator+(const CommPoly &o) const;
	CommPoly operator-(const CommPoly &o) const;
	CommPoly operator*(const CommPoly &o) const;
	CommPoly scaled(const Rational &c) const;

	bool operator==(const CommPoly &) const = default;
	std::string str() const;

private:
	Terms terms_;
};

/// 2x2 matrix over F[x, y, z], row-major.
struct SWMatrix
{
	std::array<CommPoly, 4> e;

	CommPoly &operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }
	const CommPoly &operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }

	SWMatrix operator*(const SWMatrix &o) const;
	bool operator==(const SWMatrix &) const = default;
	std::string str() const;
};

/// f in I = yA + zA: every monomial has deg_y + deg_z >= 1.
bool sw_in_I(const CommPoly &f);
/// f in I^2: every monomial has deg_y + deg_z >= 2.
bool sw_in_I2(const CommPoly &f);
/// f in F + I^2.
bool sw_in_F_plus_I2(const CommPoly &f);
/// M in [[F + I^2, I], [I, A]].
bool sw_matrix_in_R(const SWMatrix &m);

} // namespace finpres::envelop
