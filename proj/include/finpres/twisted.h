#pragma once

#include "finpres/hopf.h"
#include "finpres/rational.h"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace finpres::twisted {

using hopf::FiniteGroupTable;
using hopf::GroupRef;

/// Twisting function tau: G x G -> Q^x as a table indexed by group element.
class Cocycle
{
public:
	/// Entries must all be nonzero; the cocycle identity is not checked here.
	Cocycle(GroupRef group, std::vector<std::vector<Rational>> table);

	static Cocycle constant(GroupRef group, const Rational &c = 1);

	const GroupRef &group() const { return group_; }
	const Rational &operator()(int x, int y) const
	{
		return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
	}
	const std::vector<std::vector<Rational>> &table() const { return table_; }
	/// Copy with entry (x, y) replaced.
	Cocycle with_entry(int x, int y, const Rational &value) const;
	/// Divides every entry by tau(1,1), so that 1-bar is the identity when tau is a cocycle.
	Cocycle normalized() const;

	bool operator==(const Cocycle &o) const { return group_ == o.group_ && table_ == o.table_; }

private:
	GroupRef group_;
	std::vector<std::vector<Rational>> table_;
};

struct CocycleVerdict
{
	bool ok = true;
	/// First violating triple (x, y, z) in lexicographic order.
	std::optional<std::array<int, 3>> violation;
};

/// tau(x,y) tau(xy,z) = tau(y,z) tau(x,yz) for all triples.
CocycleVerdict cocycle_check(const Cocycle &tau);
/// (x-bar y-bar) z-bar = x-bar (y-bar z-bar) for all basis triples, using the twisted product.
CocycleVerdict associativity_check(const Cocycle &tau);

/// tau(x,y) = f(x) f(y) / f(xy), a cocycle for every nonzero f.
Cocycle coboundary(const GroupRef &group, const std::vector<Rational> &f);

class UnvalidatedCocycle : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// The twisted group algebra Q^t[G]; construction requires a valid cocycle.
class TwistedAlgebra
{
public:
	/// Normalizes tau and throws UnvalidatedCocycle if it fails cocycle_check.
	explicit TwistedAlgebra(const Cocycle &tau);

	const Cocycle &cocycle() const { return tau_; }
	const GroupRef &group() const { return tau_.group(); }

private:
	Cocycle tau_;
};

using AlgebraRef = std::shared_ptr<const TwistedAlgebra>;

class TwistedElt
{
public:
	explicit TwistedElt(AlgebraRef algebra);
	static TwistedElt basis(AlgebraRef algebra, int x, const Rational &c = 1);
	static TwistedElt scalar(AlgebraRef algebra, const Rational &c);

	const AlgebraRef &algebra() const { return algebra_; }
	const Rational &coefficient(int x) const { return coeffs_[static_cast<std::size_t>(x)]; }
	void set(int x, const Rational &c) { coeffs_.at(static_cast<std::size_t>(x)) = c; }

	TwistedElt operator+(const TwistedElt &o) const;
	TwistedElt operator-(const TwistedElt &o) const;
	/// twisted_mul.
	TwistedElt operator*(const TwistedElt &o) const;
	TwistedElt scaled(const Rational &c) const;

	bool operator==(const TwistedElt &o) const { return algebra_ == o.algebra_ && coeffs_ == o.coeffs_; }
	std::string str() const;

private:
	void require_same(const TwistedElt &o) const;

	AlgebraRef algebra_;
	std::vector<Rational> coeffs_;
};

/// x-bar y-bar = tau(x,y) (xy)-bar, extended bilinearly.
TwistedElt twisted_mul(const TwistedElt &p, const TwistedElt &q);
/// Coefficient of 1-bar.
Rational trace(const TwistedElt &p);

struct IdempotentReport
{
	bool is_idempotent;
	Rational trace;
};
IdempotentReport idempotent_verify(const TwistedElt &p);

/// Reads an N x N table of rationals, one row per line, '#' starts a comment.
Cocycle parse_cocycle(const GroupRef &group, const std::string &text);

} // namespace finpres::twisted
