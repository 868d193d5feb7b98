#pragma once

#include "finpres/mat3.h"
#include "finpres/rational.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace finpres::hopf {

/// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroupTable
{
public:
	/// Validates closure, associativity, identity and inverses.
	FiniteGroupTable(std::string name, std::vector<std::string> element_names, std::vector<std::vector<int>> table);

	static std::shared_ptr<const FiniteGroupTable> cyclic(int n);
	static std::shared_ptr<const FiniteGroupTable> s3();
	/// c2, c3, s3, or cN for a cyclic group of order N.
	static std::shared_ptr<const FiniteGroupTable> named(const std::string &name);

	const std::string &name() const { return name_; }
	int order() const { return static_cast<int>(names_.size()); }
	int identity() const { return 0; }
	int mul(int x, int y) const { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
	int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
	const std::string &element_name(int x) const { return names_[static_cast<std::size_t>(x)]; }

private:
	std::string name_;
	std::vector<std::string> names_;
	std::vector<std::vector<int>> table_;
	std::vector<int> inverse_;
};

using GroupRef = std::shared_ptr<const FiniteGroupTable>;

/// Element of the group algebra Q[G]; one coefficient per group element.
class HopfElt
{
public:
	explicit HopfElt(GroupRef group);
	static HopfElt basis(GroupRef group, int g, const Rational &c = 1);
	static HopfElt scalar(GroupRef group, const Rational &c);

	const GroupRef &group() const { return group_; }
	const Rational &coefficient(int g) const { return coeffs_[static_cast<std::size_t>(g)]; }
	void set(int g, const Rational &c) { coeffs_.at(static_cast<std::size_t>(g)) = c; }
	bool is_zero() const;

	HopfElt operator+(const HopfElt &o) const;
	HopfElt operator-(const HopfElt &o) const;
	HopfElt operator-() const { return scaled(-1); }
	HopfElt operator*(const HopfElt &o) const;
	HopfElt scaled(const Rational &c) const;

	bool operator==(const HopfElt &o) const;
	std::string str() const;

private:
	void require_same(const HopfElt &o) const;

	GroupRef group_;
	std::vector<Rational> coeffs_;
};

/// Coefficient sum.
Rational hopf_counit(const HopfElt &x);
/// g -> g^-1, extended linearly.
HopfElt hopf_antipode(const HopfElt &x);

/// [h,a,b,c] = [[e(h), a, c], [0, h, b], [0, 0, e(h)]], e the counit.
struct HopfMatrix
{
	HopfElt h;
	HopfElt a;
	HopfElt b;
	HopfElt c;

	static HopfMatrix zero(const GroupRef &group);
	/// h-bar = [h,0,0,0].
	static HopfMatrix embed(const HopfElt &h);
	/// [0,a,b,c].
	static HopfMatrix lower(const HopfElt &a, const HopfElt &b, const HopfElt &c);

	Mat3<HopfElt> to_matrix() const;
	/// Throws unless the matrix has the [h,a,b,c] shape.
	static HopfMatrix from_matrix(const Mat3<HopfElt> &m);

	bool operator==(const HopfMatrix &o) const;
	std::string str() const;
};

/// Product by generic 3x3 multiplication over Q[G].
HopfMatrix hopf_matrix_mul(const HopfMatrix &m, const HopfMatrix &n);
/// h-bar . [0,a,b,c] = [0, e(h)a, hb, e(h)c].
bool hopf_left_formula_check(const HopfElt &h, const HopfElt &a, const HopfElt &b, const HopfElt &c);
/// [0,a,b,c] . h-bar = [0, ah, b e(h), c e(h)].
bool hopf_right_formula_check(const HopfElt &h, const HopfElt &a, const HopfElt &b, const HopfElt &c);

/// h * [0,a,b,c] = [0, a S(h), hb, e(h)c]. Throws if M has a nonzero h-part.
HopfMatrix hopf_star_action(const HopfElt &h, const HopfMatrix &m);
/// The same action as sum_g k_g g-bar . M . S(g)-bar, with Delta(g) = g (x) g.
HopfMatrix hopf_star_action_by_coproduct(const HopfElt &h, const HopfMatrix &m);
/// a = S(b).
bool in_k0(const HopfMatrix &m);

} // namespace finpres::hopf
