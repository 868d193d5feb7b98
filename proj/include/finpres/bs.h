#pragma once

#include "finpres/rational.h"
#include "finpres/word.h"

#include <string>
#include <vector>

/// Baumslag-Solitar groups BS(m,n) = <a,b | a^-1 b^m a = b^n>.
///
/// Words are taken over any two-letter alphabet, letter 0 playing the role
/// of the stable letter a and letter 1 the role of b.
namespace finpres::bs {

class Params
{
public:
	Params(long m, long n);
	long m() const { return m_; }
	long n() const { return n_; }

private:
	long m_;
	long n_;
};

/// b^{t0} a^{e1} b^{t1} ... a^{ek} b^{tk}.
///
/// Canonical: the exponent t_{i-1} in front of a^{+1} lies in [0,|m|), the
/// exponent in front of a^{-1} lies in [0,|n|); t_k is unconstrained.
struct NormalForm
{
	std::vector<Integer> exponents{Integer(0)};
	std::vector<int> signs;

	bool is_identity() const { return signs.empty() && exponents.front() == 0; }
	bool operator==(const NormalForm &) const = default;
	std::string str() const;
};

AlphabetRef alphabet();

NormalForm normal_form(const Params &p, const GroupWord &w);
/// No a^-1 b^{qm} a and no a b^{qn} a^-1 factor.
bool is_pinch_free(const Params &p, const NormalForm &nf);
/// Exponents in front of stable letters are coset representatives.
bool is_canonical(const Params &p, const NormalForm &nf);

bool is_identity(const Params &p, const GroupWord &w);
bool equal(const Params &p, const GroupWord &u, const GroupWord &v);

/// BS(m,n) is Hopfian iff m | n, n | m, or |m| and |n| share the same prime divisors.
bool hopfian_criterion(long m, long n);
std::vector<long> prime_support(long value);

/// The endomorphism a -> a, b -> b^2, applied syntactically.
GroupWord pi(const GroupWord &w);

} // namespace finpres::bs
