#include "finpres/stallings.h"

#include <stdexcept>

namespace finpres::stallings {

namespace {

enum Source
{
	X = 0,
	Y = 1,
	Z = 2
};

GroupWord gen(const AlphabetRef &alphabet, int index, long power = 1)
{
	return GroupWord::power_of(alphabet, index, power);
}

} // namespace

AlphabetRef source_alphabet()
{
	static const AlphabetRef f = make_alphabet(20, {"x", "y", "z"});
	return f;
}

AlphabetRef left_alphabet()
{
	static const AlphabetRef ab = make_alphabet(21, {"a", "b"});
	return ab;
}

AlphabetRef right_alphabet()
{
	static const AlphabetRef cd = make_alphabet(22, {"c", "d"});
	return cd;
}

void WitnessConfig::validate() const
{
	if (r < 2)
		throw std::invalid_argument("witness needs r >= 2");
	if (k < 0 || k >= r)
		throw std::invalid_argument("witness residue k must lie in [0, r)");
}

GroupWord g_relator(long m, long n)
{
	const auto &f = source_alphabet();
	GroupWord xm = conjugate(gen(f, X), gen(f, Y, m));
	GroupWord zn = conjugate(gen(f, Z), gen(f, Y, n));
	return commutator(xm, zn);
}

GroupHom<DirectProductGroup> phi()
{
	const auto &ab = left_alphabet();
	const auto &cd = right_alphabet();
	DirectProductGroup target{ab, cd};
	GroupWord one_ab(ab);
	GroupWord one_cd(cd);
	return GroupHom<DirectProductGroup>(source_alphabet(), target,
	                                    {
	                                        {X, {gen(ab, 0), one_cd}},
	                                        {Y, {gen(ab, 1), gen(cd, 0)}},
	                                        {Z, {one_ab, gen(cd, 1)}},
	                                    });
}

bool check_relator_in_S(long m, long n) { return phi()(g_relator(m, n)).is_identity(); }

bool step1_conjugation_check(long n)
{
	const auto &ab = left_alphabet();
	const auto &cd = right_alphabet();
	DirectProductWord a{gen(ab, 0), GroupWord(cd)};
	DirectProductWord bc{gen(ab, 1), gen(cd, 0)};
	DirectProductWord b{gen(ab, 1), GroupWord(cd)};
	DirectProductWord bc_n{bc.left.pow(n), bc.right.pow(n)};
	DirectProductWord b_n{b.left.pow(n), b.right.pow(n)};
	DirectProductWord lhs = bc_n.inverse() * a * bc_n;
	DirectProductWord rhs = b_n.inverse() * a * b_n;
	return lhs == rhs;
}

GroupHom<PermutationGroup> witness_theta(const WitnessConfig &cfg)
{
	cfg.validate();
	std::vector<Label> cycle;
	for (int i = 0; i < cfg.r; ++i)
		cycle.emplace_back(i);
	Permutation u = Permutation::from_cycles(cfg.r, {{Symbol::Star, cfg.k}});
	Permutation v = Permutation::from_cycles(cfg.r, {cycle});
	Permutation w = Permutation::from_cycles(cfg.r, {{Symbol::Bullet, 0}});
	return GroupHom<PermutationGroup>(source_alphabet(), PermutationGroup{cfg.r}, {{X, u}, {Y, v}, {Z, w}});
}

bool witness_separates(const WitnessConfig &cfg, long m, long n)
{
	return !witness_theta(cfg)(g_relator(m, n)).is_identity();
}

bool residue_predicts_separation(const WitnessConfig &cfg, long m, long n)
{
	cfg.validate();
	long diff = ((n - m) % cfg.r + cfg.r) % cfg.r;
	return diff == cfg.k;
}

} // namespace finpres::stallings
