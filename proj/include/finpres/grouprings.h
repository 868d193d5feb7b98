#pragma once

#include "finpres/mat3.h"
#include "finpres/rational.h"
#include "finpres/word.h"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finpres {

/// Finitely supported element of the group ring C[G], G free on `alphabet`.
/// The infinite cyclic group is the rank-one case.
template <class Coeff>
class GroupRingElement
{
public:
	using Terms = std::map<GroupWord, Coeff>;

	explicit GroupRingElement(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

	static GroupRingElement of(const GroupWord &g, const Coeff &c = Coeff(1))
	{
		GroupRingElement r(g.alphabet());
		r.add_term(g, c);
		return r;
	}

	static GroupRingElement constant(AlphabetRef alphabet, const Coeff &c)
	{
		GroupRingElement r(alphabet);
		r.add_term(GroupWord(alphabet), c);
		return r;
	}

	const AlphabetRef &alphabet() const { return alphabet_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Coeff coefficient(const GroupWord &g) const
	{
		auto it = terms_.find(g);
		return it == terms_.end() ? Coeff(0) : it->second;
	}

	void add_term(const GroupWord &g, const Coeff &c)
	{
		if (g.alphabet()->id != alphabet_->id)
			throw AlphabetMismatch("group element from another group context");
		if (c == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(g, c);
		if (inserted)
			return;
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}

	GroupRingElement operator+(const GroupRingElement &o) const
	{
		require_same(o);
		GroupRingElement r = *this;
		for (const auto &[g, c] : o.terms_)
			r.add_term(g, c);
		return r;
	}

	GroupRingElement operator-(const GroupRingElement &o) const
	{
		require_same(o);
		GroupRingElement r = *this;
		for (const auto &[g, c] : o.terms_)
			r.add_term(g, -c);
		return r;
	}

	GroupRingElement operator-() const { return scaled(Coeff(-1)); }

	GroupRingElement operator*(const GroupRingElement &o) const
	{
		require_same(o);
		GroupRingElement r(alphabet_);
		for (const auto &[g, c] : terms_)
			for (const auto &[h, d] : o.terms_)
				r.add_term(g * h, c * d);
		return r;
	}

	GroupRingElement scaled(const Coeff &k) const
	{
		GroupRingElement r(alphabet_);
		for (const auto &[g, c] : terms_)
			r.add_term(g, c * k);
		return r;
	}

	bool operator==(const GroupRingElement &o) const
	{
		return alphabet_->id == o.alphabet_->id && terms_ == o.terms_;
	}

	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::ostringstream out;
		bool first = true;
		for (const auto &[g, c] : terms_)
		{
			bool negative = c < 0;
			Coeff mag = negative ? Coeff(-c) : c;
			out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
			first = false;
			if (g.is_identity())
				out << to_string(mag);
			else if (mag == 1)
				out << g.str();
			else
				out << to_string(mag) << ' ' << (g.length() > 1 ? "(" + g.str() + ")" : g.str());
		}
		return out.str();
	}

private:
	void require_same(const GroupRingElement &o) const
	{
		if (alphabet_->id != o.alphabet_->id)
			throw AlphabetMismatch("group ring elements over different groups");
	}

	AlphabetRef alphabet_;
	Terms terms_;
};

/// Z[G], the ring the Abels-type matrices live over.
using GroupRingElt = GroupRingElement<Integer>;
using RationalGroupRingElt = GroupRingElement<Rational>;

/// sum a_g g -> sum a_g g^-1.
template <class C>
GroupRingElement<C> star(const GroupRingElement<C> &x)
{
	GroupRingElement<C> r(x.alphabet());
	for (const auto &[g, c] : x.terms())
		r.add_term(g.inverse(), c);
	return r;
}

/// Coefficient sum.
template <class C>
C augmentation(const GroupRingElement<C> &x)
{
	C sum = 0;
	for (const auto &[g, c] : x.terms())
		sum += c;
	return sum;
}

class NonzeroAugmentation : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// Writes an augmentation-zero element as sum r_g (1 - g) with r_g = -a_g
/// for each non-identity g in the support, in support order.
template <class C>
std::vector<std::pair<C, GroupWord>> aug_decompose(const GroupRingElement<C> &x)
{
	if (augmentation(x) != 0)
		throw NonzeroAugmentation("element is not in the augmentation ideal");
	std::vector<std::pair<C, GroupWord>> out;
	for (const auto &[g, c] : x.terms())
		if (!g.is_identity())
			out.emplace_back(C(-c), g);
	return out;
}

/// sum r_g (1 - g).
template <class C>
GroupRingElement<C> aug_recompose(const AlphabetRef &alphabet, const std::vector<std::pair<C, GroupWord>> &parts)
{
	GroupRingElement<C> r(alphabet);
	for (const auto &[coeff, g] : parts)
	{
		r.add_term(GroupWord(alphabet), coeff);
		r.add_term(g, C(-coeff));
	}
	return r;
}

} // namespace finpres

/// Abels-type matrices [g,a,b,c] = [[1,a,c],[0,g,b],[0,0,1]] over Z[G], the
/// subgroup H* of [1,a,a*,c], and the quotient onto the wreath product Z wr Z.
namespace finpres::grouprings {

/// Free group of rank 2 on x, y.
AlphabetRef free2_alphabet();
/// Infinite cyclic group on t.
AlphabetRef cyclic_alphabet();

struct AbelsMatrix
{
	GroupWord g;
	GroupRingElt a;
	GroupRingElt b;
	GroupRingElt c;

	static AbelsMatrix identity(const AlphabetRef &alphabet);
	/// g-bar = [g,0,0,0].
	static AbelsMatrix embed(const GroupWord &g);

	Mat3<GroupRingElt> to_matrix() const;
	/// Throws unless the matrix has the [g,a,b,c] shape.
	static AbelsMatrix from_matrix(const Mat3<GroupRingElt> &m);

	bool operator==(const AbelsMatrix &o) const;
	std::string str() const;
};

/// Product computed by generic 3x3 multiplication over Z[G].
AbelsMatrix abels_mul(const AbelsMatrix &m, const AbelsMatrix &n);
AbelsMatrix abels_inverse(const AbelsMatrix &m);
/// m^-1 n^-1 m n.
AbelsMatrix abels_commutator(const AbelsMatrix &m, const AbelsMatrix &n);

/// [1, a, a*, c].
struct HStarElt
{
	GroupRingElt a;
	GroupRingElt c;

	static HStarElt identity(const AlphabetRef &alphabet);
	AbelsMatrix to_abels() const;
	bool operator==(const HStarElt &o) const { return a == o.a && c == o.c; }
	std::string str() const { return "[1, " + a.str() + ", *, " + c.str() + "]"; }
};

/// (a,c)(b,d) = (a+b, c+d+ab*).
HStarElt hstar_mul(const HStarElt &p, const HStarElt &q);
/// (a,c)^-1 = (-a, aa* - c).
HStarElt hstar_inverse(const HStarElt &p);
/// g-bar^-1 [1,a,a*,c] g-bar = [1, ag, (ag)*, c].
HStarElt hstar_conj(const GroupWord &g, const HStarElt &p);
/// ab* - ba*, the central entry of the commutator of [1,a,a*,c] and [1,b,b*,d].
GroupRingElt hstar_commutator_central(const GroupRingElt &a, const GroupRingElt &b);
/// Whether an Abels matrix lies in H*: g = 1 and b = a*.
bool in_hstar(const AbelsMatrix &m);

/// Laurent polynomial with integer coefficients, exponent -> coefficient.
using Laurent = std::map<long, Integer>;

std::string laurent_str(const Laurent &f);
/// Reads an element of Z[<t>] as a Laurent polynomial in t.
Laurent to_laurent(const GroupRingElt &x);

/// (f, k) in Z wr Z.
struct WreathElt
{
	Laurent f;
	long k = 0;

	bool operator==(const WreathElt &) const = default;
	std::string str() const { return "(" + laurent_str(f) + ", " + std::to_string(k) + ")"; }
};

/// (f,k)(f',k') = (f + t^k f', k + k').
WreathElt wreath_mul(const WreathElt &p, const WreathElt &q);

/// [1,a,a*,c] t-bar^k -> (a* as a Laurent polynomial, k); the central c is
/// forgotten. G must be the infinite cyclic group.
WreathElt wreath_quotient_map(const HStarElt &p, long k);

/// An element [1,a,a*,c] t-bar^k of the semidirect product H* x| <t-bar>.
struct HStarTimesShift
{
	HStarElt h;
	long k = 0;
};

/// The Abels matrix [1,a,a*,c] . t-bar^k.
AbelsMatrix shifted_matrix(const HStarTimesShift &p);
/// Inverse of shifted_matrix; throws if the matrix is not of that form.
HStarTimesShift split_shifted(const AbelsMatrix &m);

} // namespace finpres::grouprings
