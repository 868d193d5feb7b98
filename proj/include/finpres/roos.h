#pragma once

#include "finpres/lie.h"
#include "finpres/ncpoly.h"
#include "finpres/permutation.h"
#include "finpres/rational.h"

#include <string>
#include <vector>

namespace finpres {

/// Dense square matrix over Q.
class QMatrix
{
public:
	static QMatrix zero(std::size_t dim);
	static QMatrix identity(std::size_t dim);
	static QMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

	std::size_t dim() const { return dim_; }
	const Rational &at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
	Rational &at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

	QMatrix operator+(const QMatrix &o) const;
	QMatrix operator-(const QMatrix &o) const;
	QMatrix operator*(const QMatrix &o) const;
	QMatrix scaled(const Rational &c) const;
	bool is_zero() const;
	bool operator==(const QMatrix &o) const = default;

	/// Nonzero entries as "(row,col)=value" using the given row/column labels.
	std::string str(const std::vector<std::string> &labels) const;

private:
	explicit QMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
	void require_same(const QMatrix &o) const;

	std::size_t dim_;
	std::vector<Rational> entries_;
};

/// [p,q] = pq - qp.
QMatrix bracket(const QMatrix &p, const QMatrix &q);

} // namespace finpres

/// Roos' finitely presented, non-coherent direct sum of free Lie algebras.
///
/// F = free Lie algebra on x, y, z (inside the free associative algebra),
/// T = fl<a,b> + fl<c,d>, phi: x -> a, y -> b + c, z -> d. The relators
/// h(m,n) = [x.(ad y)^m, z.(ad y)^n] vanish under phi, and the matrix
/// representation theta separates exactly the antidiagonal m + n = s.
namespace finpres::roos {

AlphabetRef source_alphabet(); // x, y, z
AlphabetRef left_alphabet();   // a, b
AlphabetRef right_alphabet();  // c, d

/// Matrices are (s+3)x(s+3), rows and columns labelled 0..s, Star, Bullet.
struct WitnessConfig
{
	int s = 6;

	/// Throws unless s >= 1.
	void validate() const;
	std::size_t dim() const { return static_cast<std::size_t>(s) + 3; }
	std::size_t index(const Label &label) const;
	std::vector<std::string> labels() const;
};

/// Matrix unit e(row, col).
QMatrix e(const WitnessConfig &cfg, const Label &row, const Label &col);

/// h(m,n) = [x.(ad y)^m, z.(ad y)^n]; m, n >= 0.
NcPoly h_relator(int m, int n);

/// Associative substitution x -> (a,0), y -> (b,c), z -> (0,d) into the
/// product algebra F<a,b> x F<c,d>; on Lie elements this is the Lie map phi.
LiePairElt phi_lie_eval(const NcPoly &p);

/// (a,0).(ad (b,c))^n == (a,0).(ad (b,0))^n.
bool step1_ad_identity_check(int n);

struct WitnessMatrices
{
	QMatrix u; // e(Star, 0)
	QMatrix v; // sum of e(i, i+1), 0 <= i < s
	QMatrix w; // e(s, Bullet)
};

WitnessMatrices witness_matrices(const WitnessConfig &cfg);

/// u.(ad v)^m == e(Star, m) for 0 <= m <= s.
bool witness_ad_power_check(const WitnessConfig &cfg, int m);
/// w.(ad v)^n for 0 <= n <= s.
QMatrix witness_w_ad_power(const WitnessConfig &cfg, int n);
/// w.(ad v)^n == (-1)^n e(s-n, Bullet).
bool witness_w_ad_power_check(const WitnessConfig &cfg, int n);

/// theta(p) by substituting x -> u, y -> v, z -> w into every monomial.
QMatrix theta_eval(const WitnessConfig &cfg, const NcPoly &p);
/// [u.(ad v)^m, w.(ad v)^n] computed directly with matrix brackets.
QMatrix theta_relator_by_brackets(const WitnessConfig &cfg, int m, int n);

/// Whether theta(h(m,n)) is nonzero; 0 <= m, n <= s.
bool witness_separates(const WitnessConfig &cfg, int m, int n);

} // namespace finpres::roos
