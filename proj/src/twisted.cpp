#include "finpres/twisted.h"

#include <sstream>
#include <stdexcept>

namespace finpres::twisted {

Cocycle::Cocycle(GroupRef group, std::vector<std::vector<Rational>> table)
    : group_(std::move(group)), table_(std::move(table))
{
	if (!group_)
		throw std::invalid_argument("null group");
	const auto n = static_cast<std::size_t>(group_->order());
	if (table_.size() != n)
		throw std::invalid_argument("cocycle table has the wrong shape");
	for (const auto &row : table_)
	{
		if (row.size() != n)
			throw std::invalid_argument("cocycle table has the wrong shape");
		for (const auto &v : row)
			if (v == 0)
				throw std::invalid_argument("cocycle entries must be nonzero");
	}
}

Cocycle Cocycle::constant(GroupRef group, const Rational &c)
{
	const auto n = static_cast<std::size_t>(group->order());
	return Cocycle(std::move(group), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, c)));
}

Cocycle Cocycle::with_entry(int x, int y, const Rational &value) const
{
	auto t = table_;
	t.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y)) = value;
	return Cocycle(group_, std::move(t));
}

Cocycle Cocycle::normalized() const
{
	Rational base = table_[0][0];
	auto t = table_;
	for (auto &row : t)
		for (auto &v : row)
			v /= base;
	return Cocycle(group_, std::move(t));
}

CocycleVerdict cocycle_check(const Cocycle &tau)
{
	const auto &g = *tau.group();
	const int n = g.order();
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < n; ++y)
			for (int z = 0; z < n; ++z)
				if (tau(x, y) * tau(g.mul(x, y), z) != tau(y, z) * tau(x, g.mul(y, z)))
					return {false, std::array<int, 3>{x, y, z}};
	return {};
}

namespace {

// Twisted product on coefficient vectors, with no validity requirement on tau.
std::vector<Rational> raw_product(const Cocycle &tau, const std::vector<Rational> &p, const std::vector<Rational> &q)
{
	const auto &g = *tau.group();
	const int n = g.order();
	std::vector<Rational> r(static_cast<std::size_t>(n));
	for (int x = 0; x < n; ++x)
	{
		if (p[static_cast<std::size_t>(x)] == 0)
			continue;
		for (int y = 0; y < n; ++y)
			if (q[static_cast<std::size_t>(y)] != 0)
				r[static_cast<std::size_t>(g.mul(x, y))] +=
				    p[static_cast<std::size_t>(x)] * q[static_cast<std::size_t>(y)] * tau(x, y);
	}
	return r;
}

std::vector<Rational> raw_basis(int n, int x)
{
	std::vector<Rational> v(static_cast<std::size_t>(n));
	v[static_cast<std::size_t>(x)] = 1;
	return v;
}

} // namespace

CocycleVerdict associativity_check(const Cocycle &tau)
{
	const int n = tau.group()->order();
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < n; ++y)
			for (int z = 0; z < n; ++z)
			{
				auto bx = raw_basis(n, x), by = raw_basis(n, y), bz = raw_basis(n, z);
				if (raw_product(tau, raw_product(tau, bx, by), bz) != raw_product(tau, bx, raw_product(tau, by, bz)))
					return {false, std::array<int, 3>{x, y, z}};
			}
	return {};
}

Cocycle coboundary(const GroupRef &group, const std::vector<Rational> &f)
{
	const int n = group->order();
	if (static_cast<int>(f.size()) != n)
		throw std::invalid_argument("coboundary needs one value per group element");
	std::vector<std::vector<Rational>> t(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < n; ++y)
			t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
			    f[static_cast<std::size_t>(x)] * f[static_cast<std::size_t>(y)] /
			    f[static_cast<std::size_t>(group->mul(x, y))];
	return Cocycle(group, std::move(t));
}

TwistedAlgebra::TwistedAlgebra(const Cocycle &tau) : tau_(tau.normalized())
{
	CocycleVerdict v = cocycle_check(tau_);
	if (!v.ok)
	{
		const auto &[x, y, z] = *v.violation;
		throw UnvalidatedCocycle("table is not a 2-cocycle: fails at (" + tau_.group()->element_name(x) + ", " +
		                         tau_.group()->element_name(y) + ", " + tau_.group()->element_name(z) + ")");
	}
}

// ---------------------------------------------------------------------------

TwistedElt::TwistedElt(AlgebraRef algebra) : algebra_(std::move(algebra))
{
	if (!algebra_)
		throw std::invalid_argument("null twisted algebra");
	coeffs_.assign(static_cast<std::size_t>(algebra_->group()->order()), Rational(0));
}

TwistedElt TwistedElt::basis(AlgebraRef algebra, int x, const Rational &c)
{
	TwistedElt r(std::move(algebra));
	r.coeffs_.at(static_cast<std::size_t>(x)) = c;
	return r;
}

TwistedElt TwistedElt::scalar(AlgebraRef algebra, const Rational &c) { return basis(std::move(algebra), 0, c); }

void TwistedElt::require_same(const TwistedElt &o) const
{
	if (algebra_ != o.algebra_)
		throw std::invalid_argument("twisted elements over different algebras");
}

TwistedElt TwistedElt::operator+(const TwistedElt &o) const
{
	require_same(o);
	TwistedElt r = *this;
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		r.coeffs_[i] += o.coeffs_[i];
	return r;
}

TwistedElt TwistedElt::operator-(const TwistedElt &o) const
{
	require_same(o);
	TwistedElt r = *this;
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		r.coeffs_[i] -= o.coeffs_[i];
	return r;
}

TwistedElt TwistedElt::operator*(const TwistedElt &o) const
{
	require_same(o);
	TwistedElt r(algebra_);
	r.coeffs_ = raw_product(algebra_->cocycle(), coeffs_, o.coeffs_);
	return r;
}

TwistedElt TwistedElt::scaled(const Rational &c) const
{
	TwistedElt r = *this;
	for (auto &v : r.coeffs_)
		v *= c;
	return r;
}

std::string TwistedElt::str() const
{
	const auto &g = *algebra_->group();
	std::ostringstream out;
	bool first = true;
	for (int x = 0; x < g.order(); ++x)
	{
		const Rational &c = coeffs_[static_cast<std::size_t>(x)];
		if (c == 0)
			continue;
		Rational mag = abs(c);
		out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
		first = false;
		if (x == 0)
			out << to_string(mag);
		else if (mag == 1)
			out << "[" << g.element_name(x) << "]";
		else
			out << to_string(mag) << " [" << g.element_name(x) << "]";
	}
	return first ? "0" : out.str();
}

TwistedElt twisted_mul(const TwistedElt &p, const TwistedElt &q) { return p * q; }

Rational trace(const TwistedElt &p) { return p.coefficient(0); }

IdempotentReport idempotent_verify(const TwistedElt &p) { return {p * p == p, trace(p)}; }

Cocycle parse_cocycle(const GroupRef &group, const std::string &text)
{
	std::vector<std::vector<Rational>> rows;
	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line))
	{
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		std::istringstream fields(line);
		std::vector<Rational> row;
		std::string field;
		while (fields >> field)
		{
			try
			{
				row.push_back(parse_rational(field));
			}
			catch (const std::exception &)
			{
				throw std::invalid_argument("line " + std::to_string(lineno) + ": bad rational '" + field + "'");
			}
		}
		if (!row.empty())
			rows.push_back(std::move(row));
	}
	return Cocycle(group, std::move(rows));
}

} // namespace finpres::twisted
