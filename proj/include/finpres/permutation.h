#pragma once

#include <string>
#include <variant>
#include <vector>

namespace finpres {

/// The two extra points adjoined to {0,...,r-1}.
enum class Symbol
{
	Star,
	Bullet
};

using Label = std::variant<int, Symbol>;

std::string label_str(const Label &label);

/// Bijection of {0,...,r-1, Star, Bullet}.
///
/// Permutations act on the right: `p.then(q)` applies p first, so that
/// conjugation g^-1 p g relabels the points of p through g. This is the
/// convention under which the transposition (Star, k) conjugated by the
/// r-cycle (0 1 ... r-1) becomes (Star, k+1).
class Permutation
{
public:
	static Permutation identity(int r);
	static Permutation from_cycles(int r, const std::vector<std::vector<Label>> &cycles);

	int r() const { return r_; }
	Label apply(const Label &point) const;

	Permutation then(const Permutation &q) const;
	Permutation inverse() const;
	bool is_identity() const;

	bool operator==(const Permutation &) const = default;

	/// Disjoint-cycle notation, `()` for the identity.
	std::string str() const;

private:
	Permutation(int r, std::vector<int> image) : r_(r), image_(std::move(image)) {}
	int index_of(const Label &point) const;
	Label label_of(int index) const;

	int r_;
	std::vector<int> image_;
};

Permutation perm_from_cycles(int r, const std::vector<std::vector<Label>> &cycles);
/// p then q.
Permutation perm_compose(const Permutation &p, const Permutation &q);
bool perm_commutes(const Permutation &p, const Permutation &q);

} // namespace finpres
