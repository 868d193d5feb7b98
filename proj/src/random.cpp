#include "finpres/random.h"

#include <stdexcept>

namespace finpres {

long Rng::between(long lo, long hi)
{
	if (hi < lo)
		throw std::invalid_argument("empty range");
	auto span = static_cast<std::uint64_t>(hi - lo) + 1;
	return lo + static_cast<long>(engine_() % span);
}

namespace gen {

Rational rational(Rng &rng, long bound)
{
	Rational r(Integer(rng.between(-bound, bound)), Integer(rng.between(1, 3)));
	r.canonicalize();
	return r;
}

Rational nonzero_rational(Rng &rng, long bound)
{
	Rational r = 0;
	while (r == 0)
		r = rational(rng, bound);
	return r;
}

GroupWord word(Rng &rng, const AlphabetRef &alphabet, int max_length)
{
	std::vector<Generator> letters;
	long length = rng.between(0, max_length);
	for (long i = 0; i < length; ++i)
		letters.push_back({alphabet->id, static_cast<int>(rng.between(0, static_cast<long>(alphabet->rank()) - 1)),
		                   rng.coin() ? 1 : -1});
	return GroupWord::reduce(alphabet, letters);
}

GroupRingElt group_ring(Rng &rng, const AlphabetRef &alphabet, int max_terms, int max_length, long bound)
{
	GroupRingElt x(alphabet);
	long terms = rng.between(0, max_terms);
	for (long i = 0; i < terms; ++i)
		x.add_term(word(rng, alphabet, max_length), Integer(rng.between(-bound, bound)));
	return x;
}

envelop::PBWElt pbw(Rng &rng, const envelop::LieRef &lie, int max_terms, int max_degree)
{
	envelop::PBWElt p(lie);
	long terms = rng.between(0, max_terms);
	for (long t = 0; t < terms; ++t)
	{
		envelop::PBWMonomial m(lie->dim(), 0);
		long degree = rng.between(0, max_degree);
		for (long d = 0; d < degree; ++d)
			++m[static_cast<std::size_t>(rng.between(0, static_cast<long>(lie->dim()) - 1))];
		p.add_term(m, rational(rng));
	}
	return p;
}

envelop::OreElt ore(Rng &rng, int max_terms, int max_y, long x_range)
{
	envelop::OreElt p;
	long terms = rng.between(0, max_terms);
	for (long t = 0; t < terms; ++t)
		p.add_term(rng.between(-x_range, x_range), static_cast<int>(rng.between(0, max_y)), rational(rng));
	return p;
}

envelop::CommPoly comm_poly(Rng &rng, int max_terms, int max_degree)
{
	envelop::CommPoly p;
	long terms = rng.between(0, max_terms);
	for (long t = 0; t < terms; ++t)
		p.add_term({static_cast<int>(rng.between(0, max_degree)), static_cast<int>(rng.between(0, max_degree)),
		            static_cast<int>(rng.between(0, max_degree))},
		           rational(rng));
	return p;
}

namespace {

// Random polynomial whose monomials all have y,z-degree at least min_yz.
envelop::CommPoly yz_bounded(Rng &rng, int max_terms, int max_degree, int min_yz)
{
	envelop::CommPoly p;
	long terms = rng.between(0, max_terms);
	for (long t = 0; t < terms; ++t)
	{
		int dy = static_cast<int>(rng.between(0, max_degree));
		int dz = static_cast<int>(rng.between(dy >= min_yz ? 0 : min_yz - dy, max_degree + min_yz));
		p.add_term({static_cast<int>(rng.between(0, max_degree)), dy, dz}, rational(rng));
	}
	return p;
}

} // namespace

envelop::SWMatrix sw_matrix_in_R(Rng &rng, int max_terms, int max_degree)
{
	envelop::SWMatrix m;
	m(0, 0) = envelop::CommPoly::constant(rational(rng)) + yz_bounded(rng, max_terms, max_degree, 2);
	m(0, 1) = yz_bounded(rng, max_terms, max_degree, 1);
	m(1, 0) = yz_bounded(rng, max_terms, max_degree, 1);
	m(1, 1) = comm_poly(rng, max_terms, max_degree);
	return m;
}

hopf::HopfElt hopf_elt(Rng &rng, const hopf::GroupRef &group)
{
	hopf::HopfElt x(group);
	for (int g = 0; g < group->order(); ++g)
		if (rng.coin())
			x.set(g, rational(rng));
	return x;
}

twisted::TwistedElt twisted_elt(Rng &rng, const twisted::AlgebraRef &algebra)
{
	twisted::TwistedElt x(algebra);
	for (int g = 0; g < algebra->group()->order(); ++g)
		if (rng.coin())
			x.set(g, rational(rng));
	return x;
}

twisted::Cocycle twisted_by_coboundary(Rng &rng, const twisted::Cocycle &tau)
{
	const auto &group = tau.group();
	std::vector<Rational> f;
	for (int g = 0; g < group->order(); ++g)
		f.push_back(nonzero_rational(rng));
	twisted::Cocycle delta = twisted::coboundary(group, f);
	auto table = tau.table();
	for (int x = 0; x < group->order(); ++x)
		for (int y = 0; y < group->order(); ++y)
			table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *= delta(x, y);
	return twisted::Cocycle(group, std::move(table));
}

} // namespace gen

} // namespace finpres
