#pragma once

#include "finpres/grouprings.h"
#include "finpres/hopf.h"
#include "finpres/pbw.h"
#include "finpres/rational.h"
#include "finpres/sw.h"
#include "finpres/twisted.h"
#include "finpres/weyl.h"
#include "finpres/word.h"

#include <cstdint>
#include <random>

namespace finpres {

/// Seeded generator. Only the raw engine output is used, so sequences are
/// the same on every platform.
class Rng
{
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	/// Uniform-ish integer in [lo, hi].
	long between(long lo, long hi);
	bool coin() { return (engine_() & 1u) != 0; }
	std::uint64_t raw() { return engine_(); }

private:
	std::mt19937_64 engine_;
};

namespace gen {

/// Small rational p/q with |p| <= bound, 1 <= q <= 3.
Rational rational(Rng &rng, long bound = 5);
Rational nonzero_rational(Rng &rng, long bound = 5);

/// Reduced word of length at most max_length.
GroupWord word(Rng &rng, const AlphabetRef &alphabet, int max_length);
GroupRingElt group_ring(Rng &rng, const AlphabetRef &alphabet, int max_terms, int max_length, long bound = 4);

envelop::PBWElt pbw(Rng &rng, const envelop::LieRef &lie, int max_terms, int max_degree);
envelop::OreElt ore(Rng &rng, int max_terms, int max_y, long x_range);
envelop::CommPoly comm_poly(Rng &rng, int max_terms, int max_degree);
/// Random matrix in [[F + I^2, I], [I, A]], built entrywise from the allowed monomials.
envelop::SWMatrix sw_matrix_in_R(Rng &rng, int max_terms, int max_degree);

hopf::HopfElt hopf_elt(Rng &rng, const hopf::GroupRef &group);
twisted::TwistedElt twisted_elt(Rng &rng, const twisted::AlgebraRef &algebra);
/// f(x) f(y) / f(xy) for random nonzero f, times tau.
twisted::Cocycle twisted_by_coboundary(Rng &rng, const twisted::Cocycle &tau);

} // namespace gen

} // namespace finpres
