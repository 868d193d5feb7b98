#pragma once

#include "finpres/hom.h"
#include "finpres/permutation.h"
#include "finpres/word.h"

/// Stallings' finitely presented, non-coherent direct product of free groups.
///
/// F = <x,y,z> free, T = <a,b> x <c,d>, phi: x -> a, y -> bc, z -> d onto
/// S = <a, bc, d>. The relators g(m,n) = [x^(y^m), z^(y^n)] lie in ker phi,
/// and the permutation representation theta separates g(m,n) for n - m = k mod r.
namespace finpres::stallings {

AlphabetRef source_alphabet(); // x, y, z
AlphabetRef left_alphabet();   // a, b
AlphabetRef right_alphabet();  // c, d

struct WitnessConfig
{
	int r = 5;
	int k = 2;

	/// Throws unless r >= 2 and 0 <= k < r.
	void validate() const;
};

/// g(m,n) = [y^-m x y^m, y^-n z y^n].
GroupWord g_relator(long m, long n);

/// x -> (a,1), y -> (b,c), z -> (1,d).
GroupHom<DirectProductGroup> phi();

bool check_relator_in_S(long m, long n);

/// (a,1) conjugated by (b,c)^n equals (a,1) conjugated by (b,1)^n.
bool step1_conjugation_check(long n);

/// x -> (Star,k), y -> (0 1 ... r-1), z -> (Bullet,0).
GroupHom<PermutationGroup> witness_theta(const WitnessConfig &cfg);

/// Whether theta(g(m,n)) is not the identity permutation.
bool witness_separates(const WitnessConfig &cfg, long m, long n);

/// n - m = k (mod r), normalized into {0..r-1}.
bool residue_predicts_separation(const WitnessConfig &cfg, long m, long n);

} // namespace finpres::stallings
