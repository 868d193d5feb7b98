#include "finpres/hopf.h"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace finpres::hopf {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::string> element_names,
                                   std::vector<std::vector<int>> table)
    : name_(std::move(name)), names_(std::move(element_names)), table_(std::move(table))
{
	const int n = order();
	if (n == 0)
		throw std::invalid_argument("empty group");
	if (static_cast<int>(table_.size()) != n)
		throw std::invalid_argument("multiplication table has the wrong shape");
	for (const auto &row : table_)
	{
		if (static_cast<int>(row.size()) != n)
			throw std::invalid_argument("multiplication table has the wrong shape");
		for (int v : row)
			if (v < 0 || v >= n)
				throw std::invalid_argument("multiplication table is not closed");
	}
	for (int x = 0; x < n; ++x)
		if (mul(0, x) != x || mul(x, 0) != x)
			throw std::invalid_argument("element 0 is not the identity");
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < n; ++y)
			for (int z = 0; z < n; ++z)
				if (mul(mul(x, y), z) != mul(x, mul(y, z)))
					throw std::invalid_argument("multiplication table is not associative");
	inverse_.assign(static_cast<std::size_t>(n), -1);
	for (int x = 0; x < n; ++x)
	{
		for (int y = 0; y < n; ++y)
			if (mul(x, y) == 0 && mul(y, x) == 0)
			{
				inverse_[static_cast<std::size_t>(x)] = y;
				break;
			}
		if (inverse_[static_cast<std::size_t>(x)] < 0)
			throw std::invalid_argument("element has no inverse");
	}
}

std::shared_ptr<const FiniteGroupTable> FiniteGroupTable::cyclic(int n)
{
	if (n < 1)
		throw std::invalid_argument("cyclic group order must be positive");
	std::vector<std::string> names;
	std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
	for (int i = 0; i < n; ++i)
	{
		names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
		for (int j = 0; j < n; ++j)
			table[static_cast<std::size_t>(i)].push_back((i + j) % n);
	}
	return std::make_shared<const FiniteGroupTable>("c" + std::to_string(n), std::move(names), std::move(table));
}

std::shared_ptr<const FiniteGroupTable> FiniteGroupTable::s3()
{
	// Permutations of {1,2,3} as image triples, composed left to right.
	using Perm = std::array<int, 3>;
	const std::vector<Perm> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
	const std::vector<std::string> names = {"1", "(1 2 3)", "(1 3 2)", "(1 2)", "(2 3)", "(1 3)"};
	std::vector<std::vector<int>> table(perms.size());
	for (std::size_t i = 0; i < perms.size(); ++i)
		for (std::size_t j = 0; j < perms.size(); ++j)
		{
			Perm prod{};
			for (std::size_t p = 0; p < 3; ++p)
				prod[p] = perms[j][static_cast<std::size_t>(perms[i][p])];
			auto it = std::find(perms.begin(), perms.end(), prod);
			table[i].push_back(static_cast<int>(it - perms.begin()));
		}
	return std::make_shared<const FiniteGroupTable>("s3", names, std::move(table));
}

std::shared_ptr<const FiniteGroupTable> FiniteGroupTable::named(const std::string &name)
{
	static const GroupRef c2 = cyclic(2);
	static const GroupRef c3 = cyclic(3);
	static const GroupRef sym3 = s3();
	if (name == "c2")
		return c2;
	if (name == "c3")
		return c3;
	if (name == "s3")
		return sym3;
	if (name.size() > 1 && name[0] == 'c' && std::all_of(name.begin() + 1, name.end(), ::isdigit))
		return cyclic(std::stoi(name.substr(1)));
	throw std::invalid_argument("unknown finite group '" + name + "'");
}

// ---------------------------------------------------------------------------

HopfElt::HopfElt(GroupRef group) : group_(std::move(group))
{
	if (!group_)
		throw std::invalid_argument("null group");
	coeffs_.assign(static_cast<std::size_t>(group_->order()), Rational(0));
}

HopfElt HopfElt::basis(GroupRef group, int g, const Rational &c)
{
	HopfElt r(std::move(group));
	if (g < 0 || g >= r.group_->order())
		throw std::out_of_range("group element index out of range");
	r.coeffs_[static_cast<std::size_t>(g)] = c;
	return r;
}

HopfElt HopfElt::scalar(GroupRef group, const Rational &c) { return basis(std::move(group), 0, c); }

bool HopfElt::is_zero() const
{
	return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

void HopfElt::require_same(const HopfElt &o) const
{
	if (group_ != o.group_)
		throw std::invalid_argument("group algebra elements over different groups");
}

HopfElt HopfElt::operator+(const HopfElt &o) const
{
	require_same(o);
	HopfElt r = *this;
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		r.coeffs_[i] += o.coeffs_[i];
	return r;
}

HopfElt HopfElt::operator-(const HopfElt &o) const
{
	require_same(o);
	HopfElt r = *this;
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		r.coeffs_[i] -= o.coeffs_[i];
	return r;
}

HopfElt HopfElt::operator*(const HopfElt &o) const
{
	require_same(o);
	HopfElt r(group_);
	const int n = group_->order();
	for (int x = 0; x < n; ++x)
	{
		if (coeffs_[static_cast<std::size_t>(x)] == 0)
			continue;
		for (int y = 0; y < n; ++y)
			r.coeffs_[static_cast<std::size_t>(group_->mul(x, y))] +=
			    coeffs_[static_cast<std::size_t>(x)] * o.coeffs_[static_cast<std::size_t>(y)];
	}
	return r;
}

HopfElt HopfElt::scaled(const Rational &c) const
{
	HopfElt r = *this;
	for (auto &v : r.coeffs_)
		v *= c;
	return r;
}

bool HopfElt::operator==(const HopfElt &o) const { return group_ == o.group_ && coeffs_ == o.coeffs_; }

std::string HopfElt::str() const
{
	std::ostringstream out;
	bool first = true;
	for (int g = 0; g < group_->order(); ++g)
	{
		const Rational &c = coeffs_[static_cast<std::size_t>(g)];
		if (c == 0)
			continue;
		Rational mag = abs(c);
		out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
		first = false;
		if (g == 0)
			out << to_string(mag);
		else if (mag == 1)
			out << group_->element_name(g);
		else
			out << to_string(mag) << ' ' << group_->element_name(g);
	}
	return first ? "0" : out.str();
}

Rational hopf_counit(const HopfElt &x)
{
	Rational sum = 0;
	for (int g = 0; g < x.group()->order(); ++g)
		sum += x.coefficient(g);
	return sum;
}

HopfElt hopf_antipode(const HopfElt &x)
{
	HopfElt r(x.group());
	for (int g = 0; g < x.group()->order(); ++g)
		r.set(x.group()->inverse(g), x.coefficient(g));
	return r;
}

// ---------------------------------------------------------------------------

HopfMatrix HopfMatrix::zero(const GroupRef &group)
{
	HopfElt z(group);
	return {z, z, z, z};
}

HopfMatrix HopfMatrix::embed(const HopfElt &h)
{
	HopfElt z(h.group());
	return {h, z, z, z};
}

HopfMatrix HopfMatrix::lower(const HopfElt &a, const HopfElt &b, const HopfElt &c)
{
	return {HopfElt(a.group()), a, b, c};
}

Mat3<HopfElt> HopfMatrix::to_matrix() const
{
	HopfElt z(h.group());
	HopfElt corner = HopfElt::scalar(h.group(), hopf_counit(h));
	return Mat3<HopfElt>{{corner, a, c, z, h, b, z, z, corner}};
}

HopfMatrix HopfMatrix::from_matrix(const Mat3<HopfElt> &m)
{
	const GroupRef &group = m(1, 1).group();
	HopfElt z(group);
	HopfElt corner = HopfElt::scalar(group, hopf_counit(m(1, 1)));
	if (!(m(0, 0) == corner && m(2, 2) == corner && m(1, 0) == z && m(2, 0) == z && m(2, 1) == z))
		throw std::invalid_argument("matrix is not of the form [h,a,b,c]");
	return {m(1, 1), m(0, 1), m(1, 2), m(0, 2)};
}

bool HopfMatrix::operator==(const HopfMatrix &o) const { return h == o.h && a == o.a && b == o.b && c == o.c; }

std::string HopfMatrix::str() const
{
	return "[" + h.str() + ", " + a.str() + ", " + b.str() + ", " + c.str() + "]";
}

HopfMatrix hopf_matrix_mul(const HopfMatrix &m, const HopfMatrix &n)
{
	if (m.h.group() != n.h.group())
		throw std::invalid_argument("Hopf matrices over different groups");
	return HopfMatrix::from_matrix(m.to_matrix() * n.to_matrix());
}

bool hopf_left_formula_check(const HopfElt &h, const HopfElt &a, const HopfElt &b, const HopfElt &c)
{
	Rational e = hopf_counit(h);
	HopfMatrix lhs = hopf_matrix_mul(HopfMatrix::embed(h), HopfMatrix::lower(a, b, c));
	return lhs == HopfMatrix::lower(a.scaled(e), h * b, c.scaled(e));
}

bool hopf_right_formula_check(const HopfElt &h, const HopfElt &a, const HopfElt &b, const HopfElt &c)
{
	Rational e = hopf_counit(h);
	HopfMatrix lhs = hopf_matrix_mul(HopfMatrix::lower(a, b, c), HopfMatrix::embed(h));
	return lhs == HopfMatrix::lower(a * h, b.scaled(e), c.scaled(e));
}

namespace {

void require_lower(const HopfMatrix &m)
{
	if (!m.h.is_zero())
		throw std::invalid_argument("star action is defined on [0,a,b,c] only");
	if (m.h.group() != m.a.group() || m.a.group() != m.b.group() || m.b.group() != m.c.group())
		throw std::invalid_argument("matrix entries over different groups");
}

} // namespace

HopfMatrix hopf_star_action(const HopfElt &h, const HopfMatrix &m)
{
	require_lower(m);
	if (h.group() != m.h.group())
		throw std::invalid_argument("Hopf element and matrix over different groups");
	Rational e = hopf_counit(h);
	return HopfMatrix::lower(m.a * hopf_antipode(h), h * m.b, m.c.scaled(e));
}

HopfMatrix hopf_star_action_by_coproduct(const HopfElt &h, const HopfMatrix &m)
{
	require_lower(m);
	const GroupRef &group = h.group();
	if (group != m.h.group())
		throw std::invalid_argument("Hopf element and matrix over different groups");
	Mat3<HopfElt> total = HopfMatrix::zero(group).to_matrix();
	for (int g = 0; g < group->order(); ++g)
	{
		if (h.coefficient(g) == 0)
			continue;
		HopfElt left = HopfElt::basis(group, g);
		HopfElt right = hopf_antipode(left);
		Mat3<HopfElt> term = HopfMatrix::embed(left).to_matrix() * m.to_matrix() * HopfMatrix::embed(right).to_matrix();
		for (auto &entry : term.e)
			entry = entry.scaled(h.coefficient(g));
		for (std::size_t i = 0; i < 9; ++i)
			total.e[i] = total.e[i] + term.e[i];
	}
	return HopfMatrix::from_matrix(total);
}

bool in_k0(const HopfMatrix &m) { return m.a == hopf_antipode(m.b); }

} // namespace finpres::hopf
