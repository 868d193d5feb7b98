#include "finpres/grouprings.h"

namespace finpres::grouprings {

namespace {

GroupRingElt zero(const AlphabetRef &alphabet) { return GroupRingElt(alphabet); }
GroupRingElt one(const AlphabetRef &alphabet) { return GroupRingElt::constant(alphabet, 1); }

// Reads c*g off a single-term element.
bool single_group_element(const GroupRingElt &x, GroupWord &g)
{
	if (x.terms().size() != 1 || x.terms().begin()->second != 1)
		return false;
	g = x.terms().begin()->first;
	return true;
}

void require_cyclic(const AlphabetRef &alphabet)
{
	if (alphabet->id != cyclic_alphabet()->id)
		throw std::invalid_argument("the wreath quotient is defined for G = Z only");
}

} // namespace

AlphabetRef free2_alphabet()
{
	static const AlphabetRef f = make_alphabet(40, {"x", "y"});
	return f;
}

AlphabetRef cyclic_alphabet()
{
	static const AlphabetRef t = make_alphabet(41, {"t"});
	return t;
}

// ---------------------------------------------------------------------------

AbelsMatrix AbelsMatrix::identity(const AlphabetRef &alphabet)
{
	return {GroupWord(alphabet), zero(alphabet), zero(alphabet), zero(alphabet)};
}

AbelsMatrix AbelsMatrix::embed(const GroupWord &g)
{
	const auto &alphabet = g.alphabet();
	return {g, zero(alphabet), zero(alphabet), zero(alphabet)};
}

Mat3<GroupRingElt> AbelsMatrix::to_matrix() const
{
	const auto &alphabet = g.alphabet();
	auto z = zero(alphabet);
	auto u = one(alphabet);
	return Mat3<GroupRingElt>{{u, a, c, z, GroupRingElt::of(g), b, z, z, u}};
}

AbelsMatrix AbelsMatrix::from_matrix(const Mat3<GroupRingElt> &m)
{
	const auto &alphabet = m(0, 0).alphabet();
	auto z = zero(alphabet);
	auto u = one(alphabet);
	GroupWord g(alphabet);
	if (!(m(0, 0) == u && m(2, 2) == u && m(1, 0) == z && m(2, 0) == z && m(2, 1) == z) ||
	    !single_group_element(m(1, 1), g))
		throw std::invalid_argument("matrix is not of the form [g,a,b,c]");
	return {g, m(0, 1), m(1, 2), m(0, 2)};
}

bool AbelsMatrix::operator==(const AbelsMatrix &o) const { return g == o.g && a == o.a && b == o.b && c == o.c; }

std::string AbelsMatrix::str() const
{
	return "[" + g.str() + ", " + a.str() + ", " + b.str() + ", " + c.str() + "]";
}

AbelsMatrix abels_mul(const AbelsMatrix &m, const AbelsMatrix &n)
{
	if (m.g.alphabet()->id != n.g.alphabet()->id)
		throw AlphabetMismatch("Abels matrices over different groups");
	return AbelsMatrix::from_matrix(m.to_matrix() * n.to_matrix());
}

AbelsMatrix abels_inverse(const AbelsMatrix &m)
{
	// [[1,a,c],[0,g,b],[0,0,1]]^-1 = [[1, -a g^-1, a g^-1 b - c],[0, g^-1, -g^-1 b],[0,0,1]]
	GroupRingElt ginv = GroupRingElt::of(m.g.inverse());
	return {m.g.inverse(), -(m.a * ginv), -(ginv * m.b), m.a * ginv * m.b - m.c};
}

AbelsMatrix abels_commutator(const AbelsMatrix &m, const AbelsMatrix &n)
{
	return abels_mul(abels_mul(abels_inverse(m), abels_inverse(n)), abels_mul(m, n));
}

// ---------------------------------------------------------------------------

HStarElt HStarElt::identity(const AlphabetRef &alphabet) { return {zero(alphabet), zero(alphabet)}; }

AbelsMatrix HStarElt::to_abels() const { return {GroupWord(a.alphabet()), a, star(a), c}; }

HStarElt hstar_mul(const HStarElt &p, const HStarElt &q) { return {p.a + q.a, p.c + q.c + p.a * star(q.a)}; }

HStarElt hstar_inverse(const HStarElt &p) { return {-p.a, p.a * star(p.a) - p.c}; }

HStarElt hstar_conj(const GroupWord &g, const HStarElt &p) { return {p.a * GroupRingElt::of(g), p.c}; }

GroupRingElt hstar_commutator_central(const GroupRingElt &a, const GroupRingElt &b)
{
	return a * star(b) - b * star(a);
}

bool in_hstar(const AbelsMatrix &m) { return m.g.is_identity() && m.b == star(m.a); }

// ---------------------------------------------------------------------------

std::string laurent_str(const Laurent &f)
{
	if (f.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto &[e, c] : f)
	{
		bool negative = c < 0;
		Integer mag = negative ? Integer(-c) : c;
		out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
		first = false;
		if (e == 0)
		{
			out << mag.get_str();
			continue;
		}
		if (mag != 1)
			out << mag.get_str() << ' ';
		out << 't';
		if (e != 1)
			out << '^' << e;
	}
	return out.str();
}

Laurent to_laurent(const GroupRingElt &x)
{
	require_cyclic(x.alphabet());
	Laurent f;
	for (const auto &[g, c] : x.terms())
	{
		long e = 0;
		for (const auto &letter : g.letters())
			e += letter.sign;
		f[e] += c;
	}
	return f;
}

WreathElt wreath_mul(const WreathElt &p, const WreathElt &q)
{
	WreathElt r{p.f, p.k + q.k};
	for (const auto &[e, c] : q.f)
	{
		Integer &slot = r.f[e + p.k];
		slot += c;
		if (slot == 0)
			r.f.erase(e + p.k);
	}
	return r;
}

WreathElt wreath_quotient_map(const HStarElt &p, long k)
{
	require_cyclic(p.a.alphabet());
	return {to_laurent(star(p.a)), k};
}

AbelsMatrix shifted_matrix(const HStarTimesShift &p)
{
	require_cyclic(p.h.a.alphabet());
	return abels_mul(p.h.to_abels(), AbelsMatrix::embed(GroupWord::power_of(cyclic_alphabet(), 0, p.k)));
}

HStarTimesShift split_shifted(const AbelsMatrix &m)
{
	require_cyclic(m.g.alphabet());
	long k = 0;
	for (const auto &letter : m.g.letters())
		k += letter.sign;
	AbelsMatrix h = abels_mul(m, AbelsMatrix::embed(m.g.inverse()));
	if (!in_hstar(h))
		throw std::invalid_argument("matrix is not in H* . <t-bar>");
	return {{h.a, h.c}, k};
}

} // namespace finpres::grouprings
