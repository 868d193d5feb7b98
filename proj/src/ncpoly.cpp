#include "finpres/ncpoly.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace finpres {

NcPoly::NcPoly(AlphabetRef alphabet) : alphabet_(std::move(alphabet))
{
	if (!alphabet_)
		throw std::invalid_argument("null alphabet");
}

NcPoly NcPoly::constant(AlphabetRef alphabet, const Rational &c)
{
	return monomial(std::move(alphabet), {}, c);
}

NcPoly NcPoly::variable(AlphabetRef alphabet, int index) { return monomial(std::move(alphabet), {index}); }

NcPoly NcPoly::monomial(AlphabetRef alphabet, NcMonomial m, const Rational &c)
{
	NcPoly p(std::move(alphabet));
	for (int idx : m)
		if (idx < 0 || static_cast<std::size_t>(idx) >= p.alphabet_->rank())
			throw std::out_of_range("variable index " + std::to_string(idx) + " outside alphabet");
	p.add_term(m, c);
	return p;
}

Rational NcPoly::coefficient(const NcMonomial &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const NcMonomial &m, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (inserted)
		return;
	it->second += c;
	if (it->second == 0)
		terms_.erase(it);
}

void NcPoly::require_same(const NcPoly &o) const
{
	if (alphabet_->id != o.alphabet_->id)
		throw AlphabetMismatch("polynomials over different alphabets");
}

NcPoly &NcPoly::operator+=(const NcPoly &o)
{
	require_same(o);
	for (const auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

NcPoly &NcPoly::operator-=(const NcPoly &o)
{
	require_same(o);
	for (const auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

NcPoly NcPoly::operator+(const NcPoly &o) const
{
	NcPoly r = *this;
	r += o;
	return r;
}

NcPoly NcPoly::operator-(const NcPoly &o) const
{
	NcPoly r = *this;
	r -= o;
	return r;
}

NcPoly NcPoly::operator-() const { return scaled(-1); }

NcPoly NcPoly::operator*(const NcPoly &o) const
{
	require_same(o);
	NcPoly r(alphabet_);
	for (const auto &[m1, c1] : terms_)
		for (const auto &[m2, c2] : o.terms_)
		{
			NcMonomial m = m1;
			m.insert(m.end(), m2.begin(), m2.end());
			r.add_term(m, c1 * c2);
		}
	return r;
}

NcPoly NcPoly::scaled(const Rational &c) const
{
	NcPoly r(alphabet_);
	if (c == 0)
		return r;
	for (const auto &[m, coeff] : terms_)
		r.terms_.emplace(m, coeff * c);
	return r;
}

bool NcPoly::operator==(const NcPoly &o) const { return alphabet_->id == o.alphabet_->id && terms_ == o.terms_; }

std::string monomial_str(const Alphabet &alphabet, const NcMonomial &m)
{
	if (m.empty())
		return "1";
	std::ostringstream out;
	std::size_t i = 0;
	while (i < m.size())
	{
		std::size_t j = i;
		while (j < m.size() && m[j] == m[i])
			++j;
		if (i > 0)
			out << ' ';
		out << alphabet.names[static_cast<std::size_t>(m[i])];
		if (j - i > 1)
			out << '^' << (j - i);
		i = j;
	}
	return out.str();
}

std::string NcPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto &[m, c] : terms_)
	{
		Rational mag = abs(c);
		if (first)
			out << (c < 0 ? "-" : "");
		else
			out << (c < 0 ? " - " : " + ");
		first = false;
		if (m.empty())
			out << to_string(mag);
		else if (mag == 1)
			out << monomial_str(*alphabet_, m);
		else
			out << to_string(mag) << ' ' << monomial_str(*alphabet_, m);
	}
	return out.str();
}

NcPoly nc_add(const NcPoly &p, const NcPoly &q) { return p + q; }
NcPoly nc_mul(const NcPoly &p, const NcPoly &q) { return p * q; }
NcPoly nc_scale(const NcPoly &p, const Rational &c) { return p.scaled(c); }

NcPoly bracket(const NcPoly &p, const NcPoly &q) { return p * q - q * p; }

LiePairElt bracket(const LiePairElt &p, const LiePairElt &q)
{
	return {bracket(p.left, q.left), bracket(p.right, q.right)};
}

// ---------------------------------------------------------------------------

AlphabetRef invertible_alphabet(int n)
{
	if (n < 1)
		throw std::invalid_argument("rank must be positive");
	std::vector<std::string> names;
	for (int i = 1; i <= n; ++i)
		names.push_back("x" + std::to_string(i));
	for (int i = 1; i <= n; ++i)
		names.push_back("y" + std::to_string(i));
	return make_alphabet(500 + n, std::move(names));
}

namespace {

bool pairs_to_unit(int n, int a, int b) { return (a < n && b == a + n) || (a >= n && b == a - n); }

void require_paired(int n, const AlphabetRef &alphabet)
{
	if (n < 1 || alphabet->rank() != static_cast<std::size_t>(2 * n))
		throw std::invalid_argument("invertibility rewriting needs an alphabet of 2n letters");
}

} // namespace

std::vector<RewriteRule> invertible_rules(int n)
{
	auto alphabet = invertible_alphabet(n);
	std::vector<RewriteRule> rules;
	for (int i = 0; i < n; ++i)
	{
		rules.push_back({{i, n + i}, NcPoly::constant(alphabet, 1)});
		rules.push_back({{n + i, i}, NcPoly::constant(alphabet, 1)});
	}
	return rules;
}

std::vector<std::size_t> rule_occurrences(const RewriteRule &rule, const NcMonomial &m)
{
	std::vector<std::size_t> hits;
	if (rule.lhs.empty() || rule.lhs.size() > m.size())
		return hits;
	for (std::size_t pos = 0; pos + rule.lhs.size() <= m.size(); ++pos)
		if (std::equal(rule.lhs.begin(), rule.lhs.end(), m.begin() + static_cast<std::ptrdiff_t>(pos)))
			hits.push_back(pos);
	return hits;
}

NcPoly apply_rule(const RewriteRule &rule, const NcMonomial &m, std::size_t pos)
{
	NcMonomial prefix(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(pos));
	NcMonomial suffix(m.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), m.end());
	const auto &alphabet = rule.rhs.alphabet();
	return NcPoly::monomial(alphabet, prefix) * rule.rhs * NcPoly::monomial(alphabet, suffix);
}

NcMonomial reduce_invertible_monomial(int n, const NcMonomial &m)
{
	// Scanning left to right with a stack rewrites each innermost redex at
	// the leftmost position where it appears.
	NcMonomial stack;
	stack.reserve(m.size());
	for (int letter : m)
	{
		if (letter < 0 || letter >= 2 * n)
			throw std::out_of_range("variable index outside the 2n-letter alphabet");
		if (!stack.empty() && pairs_to_unit(n, stack.back(), letter))
			stack.pop_back();
		else
			stack.push_back(letter);
	}
	return stack;
}

NcPoly reduce_invertible(int n, const NcPoly &p)
{
	require_paired(n, p.alphabet());
	NcPoly r(p.alphabet());
	for (const auto &[m, c] : p.terms())
		r.add_term(reduce_invertible_monomial(n, m), c);
	return r;
}

bool is_invertible_normal(int n, const NcMonomial &m)
{
	for (std::size_t i = 0; i + 1 < m.size(); ++i)
		if (pairs_to_unit(n, m[i], m[i + 1]))
			return false;
	return true;
}

BijectionReport normal_form_group_bijection(int n, int max_length)
{
	if (n < 1 || max_length < 0)
		throw std::invalid_argument("bijection check needs n >= 1 and L >= 0");
	auto group = make_alphabet(600 + n, [n] {
		std::vector<std::string> names;
		for (int i = 1; i <= n; ++i)
			names.push_back("g" + std::to_string(i));
		return names;
	}());

	// Left side: every monomial of length <= L that no rule applies to,
	// pushed into the group letter by letter.
	std::set<GroupWord> image;
	std::size_t normal = 0;
	bool injective_and_reduced = true;
	std::vector<NcMonomial> layer{{}};
	for (int len = 0; len <= max_length; ++len)
	{
		std::vector<NcMonomial> next;
		for (const auto &m : layer)
		{
			if (is_invertible_normal(n, m))
			{
				++normal;
				std::vector<Generator> letters;
				for (int v : m)
					letters.push_back(v < n ? Generator{group->id, v, 1} : Generator{group->id, v - n, -1});
				GroupWord w = GroupWord::reduce(group, letters);
				if (w.length() != m.size() || !image.insert(w).second)
					injective_and_reduced = false;
			}
			if (len < max_length)
				for (int v = 0; v < 2 * n; ++v)
				{
					NcMonomial ext = m;
					ext.push_back(v);
					next.push_back(std::move(ext));
				}
		}
		layer = std::move(next);
	}

	// Right side: reduce every signed-generator sequence of length <= L.
	std::set<GroupWord> reduced;
	std::vector<std::vector<Generator>> seqs{{}};
	for (int len = 0; len <= max_length; ++len)
	{
		std::vector<std::vector<Generator>> next;
		for (const auto &s : seqs)
		{
			reduced.insert(GroupWord::reduce(group, s));
			if (len < max_length)
				for (int i = 0; i < n; ++i)
					for (int sign : {1, -1})
					{
						auto ext = s;
						ext.push_back({group->id, i, sign});
						next.push_back(std::move(ext));
					}
		}
		seqs = std::move(next);
	}

	BijectionReport report;
	report.normal_monomials = normal;
	report.reduced_words = reduced.size();
	report.ok = injective_and_reduced && image == reduced;
	return report;
}

bool normal_form_group_bijection_check(int n, int max_length)
{
	return normal_form_group_bijection(n, max_length).ok;
}

} // namespace finpres
