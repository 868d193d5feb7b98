#include "finpres/pbw.h"

#include <sstream>
#include <stdexcept>

namespace finpres::envelop {

LieStructure::LieStructure(std::string name, std::vector<std::string> basis, Constants constants)
    : name_(std::move(name)), basis_(std::move(basis)), c_(std::move(constants))
{
	const std::size_t d = basis_.size();
	if (c_.size() != d)
		throw std::invalid_argument("structure constants have the wrong shape");
	for (const auto &row : c_)
	{
		if (row.size() != d)
			throw std::invalid_argument("structure constants have the wrong shape");
		for (const auto &col : row)
			if (col.size() != d)
				throw std::invalid_argument("structure constants have the wrong shape");
	}
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			for (std::size_t k = 0; k < d; ++k)
				if (c_[i][j][k] != -c_[j][i][k])
					throw std::invalid_argument("structure constants are not antisymmetric");
	// Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			for (std::size_t k = 0; k < d; ++k)
				for (std::size_t out = 0; out < d; ++out)
				{
					Rational total = 0;
					for (std::size_t p = 0; p < d; ++p)
						total += c_[i][j][p] * c_[p][k][out] + c_[j][k][p] * c_[p][i][out] + c_[k][i][p] * c_[p][j][out];
					if (total != 0)
						throw std::invalid_argument("structure constants violate the Jacobi identity");
				}
}

LieStructure LieStructure::from_brackets(std::string name, std::vector<std::string> basis,
                                         const std::vector<Bracket> &brackets)
{
	const std::size_t d = basis.size();
	Constants c(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)));
	for (const auto &br : brackets)
	{
		if (br.i < 0 || br.j < 0 || static_cast<std::size_t>(br.i) >= d || static_cast<std::size_t>(br.j) >= d ||
		    br.i == br.j)
			throw std::invalid_argument("bad bracket indices");
		for (const auto &[k, value] : br.value)
		{
			if (k < 0 || static_cast<std::size_t>(k) >= d)
				throw std::invalid_argument("bad bracket value index");
			c[static_cast<std::size_t>(br.i)][static_cast<std::size_t>(br.j)][static_cast<std::size_t>(k)] += value;
			c[static_cast<std::size_t>(br.j)][static_cast<std::size_t>(br.i)][static_cast<std::size_t>(k)] -= value;
		}
	}
	return LieStructure(std::move(name), std::move(basis), std::move(c));
}

std::vector<std::string> LieStructure::registered_names()
{
	return {"line", "abelian2", "solvable2", "heisenberg", "sl2"};
}

LieRef LieStructure::named(const std::string &name)
{
	static const LieRef line = std::make_shared<const LieStructure>(from_brackets("line", {"l"}, {}));
	static const LieRef abelian2 = std::make_shared<const LieStructure>(from_brackets("abelian2", {"e1", "e2"}, {}));
	static const LieRef solvable2 =
	    std::make_shared<const LieStructure>(from_brackets("solvable2", {"e1", "e2"}, {{0, 1, {{1, 1}}}}));
	static const LieRef heisenberg = std::make_shared<const LieStructure>(
	    from_brackets("heisenberg", {"p", "q", "z"}, {{0, 1, {{2, 1}}}}));
	// basis e, h, f: [e,h] = -2e, [e,f] = h, [h,f] = -2f
	static const LieRef sl2 = std::make_shared<const LieStructure>(
	    from_brackets("sl2", {"e", "h", "f"}, {{0, 1, {{0, -2}}}, {0, 2, {{1, 1}}}, {1, 2, {{2, -2}}}}));
	if (name == "line")
		return line;
	if (name == "abelian2")
		return abelian2;
	if (name == "solvable2")
		return solvable2;
	if (name == "heisenberg")
		return heisenberg;
	if (name == "sl2")
		return sl2;
	throw std::invalid_argument("unknown Lie structure '" + name + "'");
}

// ---------------------------------------------------------------------------

PBWElt::PBWElt(LieRef lie) : lie_(std::move(lie))
{
	if (!lie_)
		throw std::invalid_argument("null Lie structure");
}

PBWElt PBWElt::constant(LieRef lie, const Rational &c)
{
	PBWMonomial zero(lie->dim(), 0);
	return monomial(std::move(lie), std::move(zero), c);
}

PBWElt PBWElt::generator(LieRef lie, std::size_t i)
{
	if (i >= lie->dim())
		throw std::out_of_range("basis index outside the Lie algebra");
	PBWMonomial m(lie->dim(), 0);
	m[i] = 1;
	return monomial(std::move(lie), std::move(m));
}

PBWElt PBWElt::monomial(LieRef lie, PBWMonomial exponents, const Rational &c)
{
	if (exponents.size() != lie->dim())
		throw std::invalid_argument("exponent vector has the wrong length");
	for (int e : exponents)
		if (e < 0)
			throw std::invalid_argument("negative PBW exponent");
	PBWElt p(std::move(lie));
	p.add_term(exponents, c);
	return p;
}

int PBWElt::degree() const
{
	int best = -1;
	for (const auto &[m, c] : terms_)
	{
		int deg = 0;
		for (int e : m)
			deg += e;
		best = std::max(best, deg);
	}
	return best;
}

void PBWElt::add_term(const PBWMonomial &m, const Rational &c)
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

void PBWElt::require_same(const PBWElt &o) const
{
	if (lie_ != o.lie_)
		throw std::invalid_argument("PBW elements over different Lie structures");
}

PBWElt PBWElt::operator+(const PBWElt &o) const
{
	require_same(o);
	PBWElt r = *this;
	for (const auto &[m, c] : o.terms_)
		r.add_term(m, c);
	return r;
}

PBWElt PBWElt::operator-(const PBWElt &o) const
{
	require_same(o);
	PBWElt r = *this;
	for (const auto &[m, c] : o.terms_)
		r.add_term(m, -c);
	return r;
}

PBWElt PBWElt::scaled(const Rational &c) const
{
	PBWElt r(lie_);
	if (c == 0)
		return r;
	for (const auto &[m, coeff] : terms_)
		r.terms_.emplace(m, coeff * c);
	return r;
}

namespace {

PBWElt times_generator(const PBWElt &p, std::size_t i);

// monomial * e_i, straightening from the right.
PBWElt monomial_times_generator(const LieRef &lie, const PBWMonomial &m, std::size_t i)
{
	std::size_t top = m.size();
	for (std::size_t j = m.size(); j-- > 0;)
		if (m[j] > 0)
		{
			top = j;
			break;
		}
	if (top == m.size() || top <= i)
	{
		PBWMonomial out = m;
		++out[i];
		return PBWElt::monomial(lie, out);
	}
	// m = m' e_j with j > i:  m' e_j e_i = (m' e_i) e_j + m' [e_j, e_i]
	PBWMonomial rest = m;
	--rest[top];
	PBWElt result = times_generator(monomial_times_generator(lie, rest, i), top);
	for (std::size_t k = 0; k < lie->dim(); ++k)
	{
		const Rational &c = lie->constant(top, i, k);
		if (c != 0)
			result = result + monomial_times_generator(lie, rest, k).scaled(c);
	}
	return result;
}

PBWElt times_generator(const PBWElt &p, std::size_t i)
{
	PBWElt result(p.lie());
	for (const auto &[m, c] : p.terms())
		result = result + monomial_times_generator(p.lie(), m, i).scaled(c);
	return result;
}

} // namespace

PBWElt PBWElt::operator*(const PBWElt &o) const
{
	require_same(o);
	PBWElt result(lie_);
	for (const auto &[m, c] : o.terms_)
	{
		PBWElt partial = scaled(c);
		for (std::size_t i = 0; i < m.size(); ++i)
			for (int rep = 0; rep < m[i]; ++rep)
				partial = times_generator(partial, i);
		result = result + partial;
	}
	return result;
}

std::string PBWElt::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto &[m, c] : terms_)
	{
		Rational mag = abs(c);
		out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
		first = false;
		std::ostringstream mono;
		bool empty = true;
		for (std::size_t i = 0; i < m.size(); ++i)
		{
			if (m[i] == 0)
				continue;
			if (!empty)
				mono << ' ';
			empty = false;
			mono << lie_->basis()[i];
			if (m[i] > 1)
				mono << '^' << m[i];
		}
		if (empty)
			out << to_string(mag);
		else if (mag == 1)
			out << mono.str();
		else
			out << to_string(mag) << ' ' << mono.str();
	}
	return out.str();
}

PBWElt pbw_mul(const PBWElt &p, const PBWElt &q) { return p * q; }

PBWElt antipode(const PBWElt &p)
{
	PBWElt result(p.lie());
	for (const auto &[m, c] : p.terms())
	{
		// (e_1^{k_1} ... e_d^{k_d})^s = (-1)^deg e_d^{k_d} ... e_1^{k_1}
		PBWElt reversed = PBWElt::constant(p.lie(), c);
		int deg = 0;
		for (std::size_t i = m.size(); i-- > 0;)
			for (int rep = 0; rep < m[i]; ++rep)
			{
				reversed = times_generator(reversed, i);
				++deg;
			}
		result = result + (deg % 2 == 0 ? reversed : -reversed);
	}
	return result;
}

PBWElt lie_bracket_in_u(const LieRef &lie, std::size_t i, std::size_t j)
{
	PBWElt r(lie);
	for (std::size_t k = 0; k < lie->dim(); ++k)
		r = r + PBWElt::generator(lie, k).scaled(lie->constant(i, j, k));
	return r;
}

// ---------------------------------------------------------------------------

UMatrix lemma32_matrix(const PBWElt &l, const PBWElt &a, const PBWElt &b)
{
	PBWElt z(l.lie());
	return UMatrix{{z, antipode(a), b, z, l, a, z, z, z}};
}

bool lemma32_ad_check(const LieRef &lie, std::size_t l, const PBWElt &a, const PBWElt &b)
{
	PBWElt z(lie);
	PBWElt ell = PBWElt::generator(lie, l);
	UMatrix lhs = matrix_bracket(lemma32_matrix(ell, z, z), lemma32_matrix(z, a, b));
	bool closed_form = lhs == lemma32_matrix(z, ell * a, z);
	bool displayed_entry = lhs(0, 1) == -(antipode(a) * ell);
	return closed_form && displayed_entry;
}

bool lemma32_ad_check(const LieRef &lie, std::size_t l, const PBWElt &a)
{
	return lemma32_ad_check(lie, l, a, PBWElt(lie));
}

PBWElt lemma32_central_entry(const PBWElt &a, const PBWElt &c) { return antipode(a) * c - antipode(c) * a; }

bool lemma32_comm_check(const LieRef &lie, const PBWElt &a, const PBWElt &b, const PBWElt &c, const PBWElt &d)
{
	PBWElt z(lie);
	UMatrix lhs = matrix_bracket(lemma32_matrix(z, a, b), lemma32_matrix(z, c, d));
	return lhs == lemma32_matrix(z, z, lemma32_central_entry(a, c));
}

} // namespace finpres::envelop
