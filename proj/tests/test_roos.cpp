#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finpres/lie.h"
#include "finpres/random.h"
#include "finpres/roos.h"

using namespace finpres;

namespace {

NcPoly xyz_var(int i) { return NcPoly::variable(roos::source_alphabet(), i); }

// Dense integer matrices, indexed with Star = s+1 and Bullet = s+2.
using Dense = std::vector<std::vector<long>>;

Dense dense_mul(const Dense &a, const Dense &b)
{
	std::size_t d = a.size();
	Dense r(d, std::vector<long>(d));
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t k = 0; k < d; ++k)
			for (std::size_t j = 0; j < d; ++j)
				r[i][j] += a[i][k] * b[k][j];
	return r;
}

Dense dense_bracket(const Dense &a, const Dense &b)
{
	Dense p = dense_mul(a, b), q = dense_mul(b, a);
	for (std::size_t i = 0; i < p.size(); ++i)
		for (std::size_t j = 0; j < p.size(); ++j)
			p[i][j] -= q[i][j];
	return p;
}

bool same(const Dense &a, const QMatrix &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < a.size(); ++j)
			if (Rational(a[i][j]) != b.at(i, j))
				return false;
	return true;
}

QMatrix random_matrix(Rng &rng, std::size_t d)
{
	QMatrix m = QMatrix::zero(d);
	for (int t = 0; t < 5; ++t)
		m = m + QMatrix::unit(d, static_cast<std::size_t>(rng.between(0, static_cast<long>(d) - 1)),
		                      static_cast<std::size_t>(rng.between(0, static_cast<long>(d) - 1)))
		            .scaled(gen::rational(rng));
	return m;
}

} // namespace

TEST_CASE("relator expansions")
{
	NcPoly x = xyz_var(0), y = xyz_var(1), z = xyz_var(2);
	CHECK(roos::h_relator(0, 0) == x * z - z * x);
	NcPoly xy = x * y - y * x;
	CHECK(roos::h_relator(1, 0) == xy * z - z * xy);
	NcPoly zy = z * y - y * z;
	CHECK(roos::h_relator(0, 1) == x * zy - zy * x);
	CHECK(roos::h_relator(3, 2) == bracket(ad_pow(x, y, 3), ad_pow(z, y, 2)));
}

TEST_CASE("phi kills the relators")
{
	auto img = roos::phi_lie_eval(xyz_var(0));
	CHECK(img.left == NcPoly::variable(roos::left_alphabet(), 0));
	CHECK(img.right.is_zero());
	CHECK(roos::phi_lie_eval(roos::h_relator(0, 0)).is_zero());
	CHECK(roos::phi_lie_eval(roos::h_relator(2, 1)).is_zero());
	for (int m = 0; m <= 6; ++m)
		for (int n = 0; n <= 6; ++n)
			CHECK(roos::phi_lie_eval(roos::h_relator(m, n)).is_zero());
	CHECK(roos::phi_lie_eval(xyz_var(0) * xyz_var(2)).is_zero()); // (a,0)(0,d) = 0 in the product
	CHECK_FALSE(roos::phi_lie_eval(xyz_var(0) * xyz_var(1)).is_zero());
}

TEST_CASE("ad identity in the target")
{
	for (int n = 0; n <= 8; ++n)
		CHECK(roos::step1_ad_identity_check(n));
}

TEST_CASE("witness matrices for s = 3")
{
	roos::WitnessConfig cfg{3};
	auto [u, v, w] = roos::witness_matrices(cfg);
	CHECK(u == roos::e(cfg, Symbol::Star, 0));
	QMatrix shift = QMatrix::zero(cfg.dim());
	for (int i = 0; i < 3; ++i)
		shift = shift + roos::e(cfg, i, i + 1);
	CHECK(v == shift);
	CHECK(w == roos::e(cfg, 3, Symbol::Bullet));
	CHECK(ad_pow(u, v, 2) == roos::e(cfg, Symbol::Star, 2));
	CHECK(ad_pow(w, v, 1) == roos::e(cfg, 2, Symbol::Bullet).scaled(-1));
	CHECK(ad_pow(u, v, 4).is_zero());
}

TEST_CASE("ad power laws against a one-bracket-at-a-time oracle")
{
	for (int s = 1; s <= 7; ++s)
	{
		roos::WitnessConfig cfg{s};
		std::size_t d = cfg.dim(), star = static_cast<std::size_t>(s) + 1, bullet = static_cast<std::size_t>(s) + 2;
		Dense u(d, std::vector<long>(d)), v = u, w = u;
		u[star][0] = 1;
		for (int i = 0; i < s; ++i)
			v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = 1;
		w[static_cast<std::size_t>(s)][bullet] = 1;
		Dense uu = u, ww = w;
		for (int k = 0; k <= s; ++k)
		{
			CHECK(roos::witness_ad_power_check(cfg, k));
			CHECK(roos::witness_w_ad_power_check(cfg, k));
			CHECK(same(ww, roos::witness_w_ad_power(cfg, k)));
			CHECK(same(uu, roos::e(cfg, Symbol::Star, k)));
			uu = dense_bracket(uu, v);
			ww = dense_bracket(ww, v);
		}
	}
}

TEST_CASE("separation examples")
{
	roos::WitnessConfig cfg{3};
	CHECK_FALSE(roos::witness_separates(cfg, 1, 1));
	CHECK(roos::witness_separates(cfg, 0, 3));
	CHECK_THROWS(roos::witness_separates(cfg, 4, 0));
}

TEST_CASE("separation dichotomy on the full grid")
{
	for (int s = 1; s <= 6; ++s)
	{
		roos::WitnessConfig cfg{s};
		for (int m = 0; m <= s; ++m)
			for (int n = 0; n <= s; ++n)
			{
				bool sep = roos::witness_separates(cfg, m, n);
				CHECK(sep == (m + n == s));
				CHECK(roos::theta_eval(cfg, roos::h_relator(m, n)) == roos::theta_relator_by_brackets(cfg, m, n));
			}
	}
}

TEST_CASE("matrix bracket satisfies Jacobi")
{
	Rng rng(41);
	for (int i = 0; i < 50; ++i)
	{
		QMatrix a = random_matrix(rng, 5), b = random_matrix(rng, 5), c = random_matrix(rng, 5);
		CHECK((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero());
	}
}
