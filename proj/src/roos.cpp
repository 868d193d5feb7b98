#include "finpres/roos.h"

#include <sstream>
#include <stdexcept>

namespace finpres {

QMatrix QMatrix::zero(std::size_t dim) { return QMatrix(dim); }

QMatrix QMatrix::identity(std::size_t dim)
{
	QMatrix m(dim);
	for (std::size_t i = 0; i < dim; ++i)
		m.at(i, i) = 1;
	return m;
}

QMatrix QMatrix::unit(std::size_t dim, std::size_t row, std::size_t col)
{
	if (row >= dim || col >= dim)
		throw std::out_of_range("matrix unit outside dimension");
	QMatrix m(dim);
	m.at(row, col) = 1;
	return m;
}

void QMatrix::require_same(const QMatrix &o) const
{
	if (dim_ != o.dim_)
		throw std::invalid_argument("matrix dimensions differ");
}

QMatrix QMatrix::operator+(const QMatrix &o) const
{
	require_same(o);
	QMatrix r = *this;
	for (std::size_t i = 0; i < entries_.size(); ++i)
		r.entries_[i] += o.entries_[i];
	return r;
}

QMatrix QMatrix::operator-(const QMatrix &o) const
{
	require_same(o);
	QMatrix r = *this;
	for (std::size_t i = 0; i < entries_.size(); ++i)
		r.entries_[i] -= o.entries_[i];
	return r;
}

QMatrix QMatrix::operator*(const QMatrix &o) const
{
	require_same(o);
	QMatrix r(dim_);
	for (std::size_t i = 0; i < dim_; ++i)
		for (std::size_t k = 0; k < dim_; ++k)
		{
			const Rational &a = at(i, k);
			if (a == 0)
				continue;
			for (std::size_t j = 0; j < dim_; ++j)
				if (o.at(k, j) != 0)
					r.at(i, j) += a * o.at(k, j);
		}
	return r;
}

QMatrix QMatrix::scaled(const Rational &c) const
{
	QMatrix r = *this;
	for (auto &x : r.entries_)
		x *= c;
	return r;
}

bool QMatrix::is_zero() const
{
	for (const auto &x : entries_)
		if (x != 0)
			return false;
	return true;
}

std::string QMatrix::str(const std::vector<std::string> &labels) const
{
	std::ostringstream out;
	bool first = true;
	for (std::size_t i = 0; i < dim_; ++i)
		for (std::size_t j = 0; j < dim_; ++j)
		{
			if (at(i, j) == 0)
				continue;
			if (!first)
				out << ' ';
			first = false;
			out << "e(" << labels.at(i) << ',' << labels.at(j) << ")=" << to_string(at(i, j));
		}
	return first ? "0" : out.str();
}

QMatrix bracket(const QMatrix &p, const QMatrix &q) { return p * q - q * p; }

} // namespace finpres

namespace finpres::roos {

namespace {

enum Source
{
	X = 0,
	Y = 1,
	Z = 2
};

void require_range(const WitnessConfig &cfg, int value, const char *what)
{
	if (value < 0 || value > cfg.s)
		throw std::out_of_range(std::string(what) + " must lie in [0, s]");
}

} // namespace

AlphabetRef source_alphabet()
{
	static const AlphabetRef f = make_alphabet(30, {"x", "y", "z"});
	return f;
}

AlphabetRef left_alphabet()
{
	static const AlphabetRef ab = make_alphabet(31, {"a", "b"});
	return ab;
}

AlphabetRef right_alphabet()
{
	static const AlphabetRef cd = make_alphabet(32, {"c", "d"});
	return cd;
}

void WitnessConfig::validate() const
{
	if (s < 1)
		throw std::invalid_argument("witness needs s >= 1");
}

std::size_t WitnessConfig::index(const Label &label) const
{
	if (const int *i = std::get_if<int>(&label))
	{
		if (*i < 0 || *i > s)
			throw std::out_of_range("matrix label " + std::to_string(*i) + " outside {0..s}");
		return static_cast<std::size_t>(*i);
	}
	return std::get<Symbol>(label) == Symbol::Star ? static_cast<std::size_t>(s) + 1 : static_cast<std::size_t>(s) + 2;
}

std::vector<std::string> WitnessConfig::labels() const
{
	std::vector<std::string> out;
	for (int i = 0; i <= s; ++i)
		out.push_back(std::to_string(i));
	out.push_back(label_str(Symbol::Star));
	out.push_back(label_str(Symbol::Bullet));
	return out;
}

QMatrix e(const WitnessConfig &cfg, const Label &row, const Label &col)
{
	cfg.validate();
	return QMatrix::unit(cfg.dim(), cfg.index(row), cfg.index(col));
}

NcPoly h_relator(int m, int n)
{
	if (m < 0 || n < 0)
		throw std::invalid_argument("h(m,n) needs m, n >= 0");
	const auto &f = source_alphabet();
	NcPoly x = NcPoly::variable(f, X);
	NcPoly y = NcPoly::variable(f, Y);
	NcPoly z = NcPoly::variable(f, Z);
	return bracket(ad_pow(x, y, m), ad_pow(z, y, n));
}

LiePairElt phi_lie_eval(const NcPoly &p)
{
	if (p.alphabet()->id != source_alphabet()->id)
		throw AlphabetMismatch("phi is defined on polynomials in x, y, z");
	NcPoly left(left_alphabet());
	NcPoly right(right_alphabet());
	for (const auto &[m, c] : p.terms())
	{
		// x -> (a, 0), y -> (b, c), z -> (0, d)
		NcMonomial l;
		NcMonomial r;
		bool left_alive = true;
		bool right_alive = true;
		for (int v : m)
		{
			if (v == X)
			{
				l.push_back(0);
				right_alive = false;
			}
			else if (v == Y)
			{
				l.push_back(1);
				r.push_back(0);
			}
			else
			{
				r.push_back(1);
				left_alive = false;
			}
		}
		if (left_alive)
			left.add_term(l, c);
		if (right_alive)
			right.add_term(r, c);
	}
	return {left, right};
}

bool step1_ad_identity_check(int n)
{
	const auto &ab = left_alphabet();
	const auto &cd = right_alphabet();
	LiePairElt a{NcPoly::variable(ab, 0), NcPoly(cd)};
	LiePairElt b_plus_c{NcPoly::variable(ab, 1), NcPoly::variable(cd, 0)};
	LiePairElt b{NcPoly::variable(ab, 1), NcPoly(cd)};
	return ad_pow(a, b_plus_c, n) == ad_pow(a, b, n);
}

WitnessMatrices witness_matrices(const WitnessConfig &cfg)
{
	cfg.validate();
	QMatrix v = QMatrix::zero(cfg.dim());
	for (int i = 0; i < cfg.s; ++i)
		v = v + e(cfg, i, i + 1);
	return {e(cfg, Symbol::Star, 0), v, e(cfg, cfg.s, Symbol::Bullet)};
}

bool witness_ad_power_check(const WitnessConfig &cfg, int m)
{
	require_range(cfg, m, "ad exponent");
	auto [u, v, w] = witness_matrices(cfg);
	return ad_pow(u, v, m) == e(cfg, Symbol::Star, m);
}

QMatrix witness_w_ad_power(const WitnessConfig &cfg, int n)
{
	require_range(cfg, n, "ad exponent");
	auto [u, v, w] = witness_matrices(cfg);
	return ad_pow(w, v, n);
}

bool witness_w_ad_power_check(const WitnessConfig &cfg, int n)
{
	Rational sign = n % 2 == 0 ? 1 : -1;
	return witness_w_ad_power(cfg, n) == e(cfg, cfg.s - n, Symbol::Bullet).scaled(sign);
}

QMatrix theta_eval(const WitnessConfig &cfg, const NcPoly &p)
{
	if (p.alphabet()->id != source_alphabet()->id)
		throw AlphabetMismatch("theta is defined on polynomials in x, y, z");
	auto mats = witness_matrices(cfg);
	const QMatrix *images[] = {&mats.u, &mats.v, &mats.w};
	QMatrix total = QMatrix::zero(cfg.dim());
	for (const auto &[m, c] : p.terms())
	{
		QMatrix prod = QMatrix::identity(cfg.dim());
		for (int v : m)
		{
			prod = prod * *images[v];
			if (prod.is_zero())
				break;
		}
		if (!prod.is_zero())
			total = total + prod.scaled(c);
	}
	return total;
}

QMatrix theta_relator_by_brackets(const WitnessConfig &cfg, int m, int n)
{
	require_range(cfg, m, "m");
	require_range(cfg, n, "n");
	auto [u, v, w] = witness_matrices(cfg);
	return bracket(ad_pow(u, v, m), ad_pow(w, v, n));
}

bool witness_separates(const WitnessConfig &cfg, int m, int n)
{
	require_range(cfg, m, "m");
	require_range(cfg, n, "n");
	return !theta_eval(cfg, h_relator(m, n)).is_zero();
}

} // namespace finpres::roos
