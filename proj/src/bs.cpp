#include "finpres/bs.h"

#include <sstream>
#include <stdexcept>

namespace finpres::bs {

namespace {

constexpr int kStable = 0;
constexpr int kBase = 1;

void require_two_letters(const GroupWord &w)
{
	if (w.alphabet()->rank() != 2)
		throw std::invalid_argument("Baumslag-Solitar words need a two-letter alphabet");
}

bool divides(long d, const Integer &t) { return mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(d < 0 ? -d : d)) != 0; }

// The pinch a^{first} b^t a^{-first} is removable iff t is a multiple of the
// subgroup it must belong to: m when first == -1, n when first == +1.
long pinch_modulus(const Params &p, int first) { return first < 0 ? p.m() : p.n(); }
long pinch_target(const Params &p, int first) { return first < 0 ? p.n() : p.m(); }

} // namespace

Params::Params(long m, long n) : m_(m), n_(n)
{
	if (m == 0 || n == 0)
		throw std::invalid_argument("BS(m,n) needs nonzero m and n");
}

AlphabetRef alphabet()
{
	static const AlphabetRef ab = make_alphabet(10, {"a", "b"});
	return ab;
}

std::string NormalForm::str() const
{
	std::ostringstream out;
	bool first = true;
	auto emit = [&](const std::string &name, const Integer &power) {
		if (power == 0)
			return;
		if (!first)
			out << ' ';
		first = false;
		out << name;
		if (power != 1)
			out << '^' << power.get_str();
	};
	emit("b", exponents[0]);
	for (std::size_t i = 0; i < signs.size(); ++i)
	{
		emit("a", Integer(signs[i]));
		emit("b", exponents[i + 1]);
	}
	return first ? "1" : out.str();
}

NormalForm normal_form(const Params &p, const GroupWord &w)
{
	require_two_letters(w);
	NormalForm nf;

	// Britton reduction: one stack pass removing pinches as they close.
	for (const auto &g : w.letters())
	{
		if (g.index == kBase)
		{
			nf.exponents.back() += g.sign;
			continue;
		}
		if (!nf.signs.empty() && nf.signs.back() == -g.sign)
		{
			int first = nf.signs.back();
			const Integer &t = nf.exponents.back();
			if (divides(pinch_modulus(p, first), t))
			{
				Integer replacement = t / pinch_modulus(p, first) * pinch_target(p, first);
				nf.exponents.pop_back();
				nf.signs.pop_back();
				nf.exponents.back() += replacement;
				continue;
			}
		}
		nf.signs.push_back(g.sign);
		nf.exponents.emplace_back(0);
	}

	// Coset representatives, carrying quotients rightward:
	//   b^{qm+r} a = b^r a b^{qn},   b^{qn+r} a^-1 = b^r a^-1 b^{qm}.
	for (std::size_t i = 0; i < nf.signs.size(); ++i)
	{
		long mod = nf.signs[i] > 0 ? p.m() : p.n();
		long other = nf.signs[i] > 0 ? p.n() : p.m();
		Integer abs_mod = mod < 0 ? -mod : mod;
		Integer r;
		mpz_fdiv_r(r.get_mpz_t(), nf.exponents[i].get_mpz_t(), abs_mod.get_mpz_t());
		Integer q = (nf.exponents[i] - r) / mod;
		nf.exponents[i] = r;
		nf.exponents[i + 1] += q * other;
	}
	return nf;
}

bool is_pinch_free(const Params &p, const NormalForm &nf)
{
	for (std::size_t i = 0; i + 1 < nf.signs.size(); ++i)
	{
		int first = nf.signs[i];
		if (nf.signs[i + 1] == -first && divides(pinch_modulus(p, first), nf.exponents[i + 1]))
			return false;
	}
	return true;
}

bool is_canonical(const Params &p, const NormalForm &nf)
{
	if (nf.exponents.size() != nf.signs.size() + 1)
		return false;
	for (std::size_t i = 0; i < nf.signs.size(); ++i)
	{
		long mod = nf.signs[i] > 0 ? p.m() : p.n();
		Integer bound = mod < 0 ? -mod : mod;
		if (nf.exponents[i] < 0 || nf.exponents[i] >= bound)
			return false;
	}
	return true;
}

bool is_identity(const Params &p, const GroupWord &w) { return normal_form(p, w).is_identity(); }

bool equal(const Params &p, const GroupWord &u, const GroupWord &v) { return is_identity(p, u * v.inverse()); }

std::vector<long> prime_support(long value)
{
	if (value == 0)
		throw std::invalid_argument("prime support of zero");
	long v = value < 0 ? -value : value;
	std::vector<long> primes;
	for (long d = 2; d * d <= v; ++d)
	{
		if (v % d != 0)
			continue;
		primes.push_back(d);
		while (v % d == 0)
			v /= d;
	}
	if (v > 1)
		primes.push_back(v);
	return primes;
}

bool hopfian_criterion(long m, long n)
{
	if (m == 0 || n == 0)
		throw std::invalid_argument("BS(m,n) needs nonzero m and n");
	if (n % m == 0 || m % n == 0)
		return true;
	return prime_support(m) == prime_support(n);
}

GroupWord pi(const GroupWord &w)
{
	require_two_letters(w);
	std::vector<Generator> letters;
	letters.reserve(w.length() * 2);
	for (const auto &g : w.letters())
	{
		letters.push_back(g);
		if (g.index == kBase)
			letters.push_back(g);
	}
	return GroupWord::reduce(w.alphabet(), letters);
}

} // namespace finpres::bs
