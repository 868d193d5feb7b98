#pragma once

#include "finpres/lie.h"
#include "finpres/rational.h"
#include "finpres/word.h"

#include <map>
#include <string>
#include <vector>

namespace finpres {

/// Noncommutative monomial as a sequence of variable indices; empty is 1.
using NcMonomial = std::vector<int>;

/// Length-lexicographic order by variable index.
struct LengthLexLess
{
	bool operator()(const NcMonomial &a, const NcMonomial &b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

/// Element of the free associative algebra over Q on an alphabet.
class NcPoly
{
public:
	using Terms = std::map<NcMonomial, Rational, LengthLexLess>;

	explicit NcPoly(AlphabetRef alphabet);
	static NcPoly constant(AlphabetRef alphabet, const Rational &c);
	static NcPoly variable(AlphabetRef alphabet, int index);
	static NcPoly monomial(AlphabetRef alphabet, NcMonomial m, const Rational &c = 1);

	const AlphabetRef &alphabet() const { return alphabet_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational coefficient(const NcMonomial &m) const;

	/// Adds c*m, dropping the term if it cancels.
	void add_term(const NcMonomial &m, const Rational &c);

	NcPoly &operator+=(const NcPoly &o);
	NcPoly &operator-=(const NcPoly &o);
	NcPoly operator+(const NcPoly &o) const;
	NcPoly operator-(const NcPoly &o) const;
	NcPoly operator-() const;
	NcPoly operator*(const NcPoly &o) const;
	NcPoly scaled(const Rational &c) const;

	bool operator==(const NcPoly &o) const;

	std::string str() const;

private:
	void require_same(const NcPoly &o) const;

	AlphabetRef alphabet_;
	Terms terms_;
};

NcPoly nc_add(const NcPoly &p, const NcPoly &q);
NcPoly nc_mul(const NcPoly &p, const NcPoly &q);
NcPoly nc_scale(const NcPoly &p, const Rational &c);

/// [p,q] = pq - qp.
NcPoly bracket(const NcPoly &p, const NcPoly &q);

std::string monomial_str(const Alphabet &alphabet, const NcMonomial &m);

/// Element of the direct sum of two free Lie algebras, each embedded in its
/// free associative algebra. Brackets act componentwise.
struct LiePairElt
{
	NcPoly left;
	NcPoly right;

	LiePairElt operator+(const LiePairElt &o) const { return {left + o.left, right + o.right}; }
	LiePairElt operator-(const LiePairElt &o) const { return {left - o.left, right - o.right}; }
	LiePairElt scaled(const Rational &c) const { return {left.scaled(c), right.scaled(c)}; }
	bool is_zero() const { return left.is_zero() && right.is_zero(); }
	bool operator==(const LiePairElt &o) const { return left == o.left && right == o.right; }
	std::string str() const { return "(" + left.str() + ", " + right.str() + ")"; }
};

LiePairElt bracket(const LiePairElt &p, const LiePairElt &q);

// ---------------------------------------------------------------------------
// invertibility rewriting: x_i y_i -> 1, y_i x_i -> 1

/// Alphabet x1..xn, y1..yn with x_i at index i-1 and y_i at index n+i-1.
AlphabetRef invertible_alphabet(int n);

/// A rewrite rule lhs -> rhs; lhs is never the unit monomial.
struct RewriteRule
{
	NcMonomial lhs;
	NcPoly rhs;
};

/// The 2n rules pairing each x_i with its inverse y_i.
std::vector<RewriteRule> invertible_rules(int n);

/// Positions where `rule.lhs` occurs as a factor of `m`.
std::vector<std::size_t> rule_occurrences(const RewriteRule &rule, const NcMonomial &m);
/// Rewrites the occurrence of `rule.lhs` at `pos` in `m`.
NcPoly apply_rule(const RewriteRule &rule, const NcMonomial &m, std::size_t pos);

/// Leftmost-innermost normal form of a single monomial.
NcMonomial reduce_invertible_monomial(int n, const NcMonomial &m);
NcPoly reduce_invertible(int n, const NcPoly &p);

/// Whether a monomial contains no x_i y_i or y_i x_i factor.
bool is_invertible_normal(int n, const NcMonomial &m);

struct BijectionReport
{
	bool ok = false;
	std::size_t normal_monomials = 0;
	std::size_t reduced_words = 0;
};

/// Compares the normal monomials of length <= L with the freely reduced
/// words of length <= L in the free group of rank n, under x_i -> g_i,
/// y_i -> g_i^-1. Both sides are enumerated independently.
BijectionReport normal_form_group_bijection(int n, int max_length);
bool normal_form_group_bijection_check(int n, int max_length);

} // namespace finpres
