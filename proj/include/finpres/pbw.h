#pragma once

#include "finpres/mat3.h"
#include "finpres/rational.h"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace finpres::envelop {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry and the Jacobi identity
/// are checked on construction.
class LieStructure
{
public:
	using Constants = std::vector<std::vector<std::vector<Rational>>>;

	LieStructure(std::string name, std::vector<std::string> basis, Constants constants);

	/// Builds the constants from the brackets [e_i, e_j] with i < j.
	struct Bracket
	{
		int i;
		int j;
		std::vector<std::pair<int, Rational>> value;
	};
	static LieStructure from_brackets(std::string name, std::vector<std::string> basis,
	                                  const std::vector<Bracket> &brackets);

	/// Registered structures: line, abelian2, solvable2, heisenberg, sl2.
	static std::shared_ptr<const LieStructure> named(const std::string &name);
	static std::vector<std::string> registered_names();

	const std::string &name() const { return name_; }
	std::size_t dim() const { return basis_.size(); }
	const std::vector<std::string> &basis() const { return basis_; }
	const Rational &constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

private:
	std::string name_;
	std::vector<std::string> basis_;
	Constants c_;
};

using LieRef = std::shared_ptr<const LieStructure>;

/// Exponent vector of an ordered monomial e_1^{k_1} ... e_d^{k_d}.
using PBWMonomial = std::vector<int>;

/// Element of U(L) in the PBW basis.
class PBWElt
{
public:
	using Terms = std::map<PBWMonomial, Rational>;

	explicit PBWElt(LieRef lie);
	static PBWElt constant(LieRef lie, const Rational &c);
	static PBWElt generator(LieRef lie, std::size_t i);
	static PBWElt monomial(LieRef lie, PBWMonomial exponents, const Rational &c = 1);

	const LieRef &lie() const { return lie_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	int degree() const;

	void add_term(const PBWMonomial &m, const Rational &c);

	PBWElt operator+(const PBWElt &o) const;
	PBWElt operator-(const PBWElt &o) const;
	PBWElt operator-() const { return scaled(-1); }
	/// pbw_mul.
	PBWElt operator*(const PBWElt &o) const;
	PBWElt scaled(const Rational &c) const;

	bool operator==(const PBWElt &o) const { return lie_ == o.lie_ && terms_ == o.terms_; }
	std::string str() const;

private:
	void require_same(const PBWElt &o) const;

	LieRef lie_;
	Terms terms_;
};

/// Product in the PBW basis by straightening e_j e_i -> e_i e_j + [e_j, e_i] for j > i.
PBWElt pbw_mul(const PBWElt &p, const PBWElt &q);

/// The antiautomorphism with e_i -> -e_i.
PBWElt antipode(const PBWElt &p);

/// [e_i, e_j] as an element of U(L).
PBWElt lie_bracket_in_u(const LieRef &lie, std::size_t i, std::size_t j);

// ---------------------------------------------------------------------------
// 3x3 matrices over U: [l, a, b] = [[0, a^s, b], [0, l, a], [0, 0, 0]]

using UMatrix = Mat3<PBWElt>;

/// [l, a, b] with l an arbitrary element of U (in practice an element of L).
UMatrix lemma32_matrix(const PBWElt &l, const PBWElt &a, const PBWElt &b);

/// [e_l, 0, 0] * [0, a, b] computed generically equals [0, e_l a, 0], and
/// its top entry equals -a^s e_l.
bool lemma32_ad_check(const LieRef &lie, std::size_t l, const PBWElt &a, const PBWElt &b);
bool lemma32_ad_check(const LieRef &lie, std::size_t l, const PBWElt &a);

/// [0, a, b] * [0, c, d] computed generically equals [0, 0, a^s c - c^s a].
bool lemma32_comm_check(const LieRef &lie, const PBWElt &a, const PBWElt &b, const PBWElt &c, const PBWElt &d);

/// a^s c - c^s a.
PBWElt lemma32_central_entry(const PBWElt &a, const PBWElt &c);

} // namespace finpres::envelop
