// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "finpres/bs.h"
#include "finpres/grouprings.h"
#include "finpres/hopf.h"
#include "finpres/ncpoly.h"
#include "finpres/pbw.h"
#include "finpres/random.h"
#include "finpres/roos.h"
#include "finpres/stallings.h"
#include "finpres/suites.h"
#include "finpres/sw.h"
#include "finpres/twisted.h"
#include "finpres/weyl.h"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace finpres;

namespace {

// Collects failures for one criterion; only the first few are printed.
class Outcome
{
public:
	void require(bool ok, const std::function<std::string()> &what)
	{
		++checks_;
		if (ok)
			return;
		if (failures_.size() < 8)
			failures_.push_back(what());
		++failed_;
	}
	void require(bool ok, const std::string &what)
	{
		require(ok, [&] { return what; });
	}
	bool passed() const { return failed_ == 0; }
	long checks() const { return checks_; }
	long failed() const { return failed_; }
	const std::vector<std::string> &failures() const { return failures_; }

private:
	long checks_ = 0;
	long failed_ = 0;
	std::vector<std::string> failures_;
};

std::string pair_str(long m, long n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void stallings_dichotomy(Outcome &out)
{
	stallings::WitnessConfig cfg{5, 2};
	for (long m = -7; m <= 7; ++m)
		for (long n = -7; n <= 7; ++n)
		{
			long d = ((n - m) % 5 + 5) % 5;
			out.require(stallings::witness_separates(cfg, m, n) == (d == 2), "theta(g" + pair_str(m, n) + ")");
			out.require(stallings::check_relator_in_S(m, n), "phi(g" + pair_str(m, n) + ") != 1");
		}
}

void roos_dichotomy(Outcome &out)
{
	roos::WitnessConfig cfg{6};
	for (int m = 0; m <= 6; ++m)
		for (int n = 0; n <= 6; ++n)
		{
			out.require(roos::witness_separates(cfg, m, n) == (m + n == 6), "theta(h" + pair_str(m, n) + ")");
			out.require(roos::phi_lie_eval(roos::h_relator(m, n)).is_zero(), "phi(h" + pair_str(m, n) + ") != 0");
		}
	for (int n = 0; n <= 8; ++n)
		out.require(roos::step1_ad_identity_check(n), "ad identity n=" + std::to_string(n));
	for (int k = 0; k <= 6; ++k)
	{
		out.require(roos::witness_ad_power_check(cfg, k), "u (ad v)^" + std::to_string(k));
		out.require(roos::witness_w_ad_power_check(cfg, k), "w (ad v)^" + std::to_string(k));
	}
}

void baumslag_solitar(Outcome &out)
{
	bs::Params p(2, 3);
	auto w = [](const std::string &t) { return parse_word(bs::alphabet(), t); };
	out.require(bs::normal_form(p, w("a^-1 b^2 a b^-3")).is_identity(), "a^-1 b^2 a b^-3 not trivial");
	GroupWord c = w("[a^-1 b a, b]");
	bs::NormalForm nf = bs::normal_form(p, c);
	out.require(!nf.is_identity() && bs::is_pinch_free(p, nf), "[a^-1 b a, b] normal form");
	out.require(bs::is_identity(p, bs::pi(c)), "pi([a^-1 b a, b]) not trivial");
	out.require(!bs::hopfian_criterion(2, 3), "hopfian(2,3)");
	out.require(bs::hopfian_criterion(2, 4), "hopfian(2,4)");
	out.require(!bs::hopfian_criterion(10, 15), "hopfian(10,15)");

	Rng rng(3);
	GroupWord r = w("a^-1 b^2 a b^-3");
	for (int i = 0; i < 1000; ++i)
	{
		GroupWord u = gen::word(rng, bs::alphabet(), 12);
		auto cut = static_cast<std::size_t>(rng.between(0, static_cast<long>(u.length())));
		GroupWord left = GroupWord::reduce(bs::alphabet(), {u.letters().begin(), u.letters().begin() + static_cast<long>(cut)});
		GroupWord right = GroupWord::reduce(bs::alphabet(), {u.letters().begin() + static_cast<long>(cut), u.letters().end()});
		GroupWord inserted = left * conjugate(rng.coin() ? r : r.inverse(), gen::word(rng, bs::alphabet(), 4)) * right;
		out.require(bs::normal_form(p, u) == bs::normal_form(p, inserted), [&] { return "insertion into " + u.str(); });
	}
}

void abels_identities(Outcome &out)
{
	using namespace grouprings;
	Rng rng(4);
	for (const auto &alphabet : {free2_alphabet(), cyclic_alphabet()})
		for (int i = 0; i < 500; ++i)
		{
			HStarElt p{gen::group_ring(rng, alphabet, 3, 3), gen::group_ring(rng, alphabet, 3, 3)};
			HStarElt q{gen::group_ring(rng, alphabet, 3, 3), gen::group_ring(rng, alphabet, 3, 3)};
			GroupWord g = gen::word(rng, alphabet, 4);
			AbelsMatrix pm = p.to_abels(), qm = q.to_abels();
			out.require(hstar_mul(p, q).to_abels() == abels_mul(pm, qm), [&] { return "mult " + p.str() + " " + q.str(); });
			AbelsMatrix conj = abels_mul(abels_mul(AbelsMatrix::embed(g.inverse()), pm), AbelsMatrix::embed(g));
			out.require(hstar_conj(g, p).to_abels() == conj, [&] { return "conj " + p.str() + " by " + g.str(); });
			HStarElt central{GroupRingElt(alphabet), hstar_commutator_central(p.a, q.a)};
			out.require(abels_commutator(pm, qm) == central.to_abels(), [&] { return "comm " + p.str() + " " + q.str(); });
			out.require(star(star(p.a)) == p.a && star(p.a * q.a) == star(q.a) * star(p.a),
			            [&] { return "star on " + p.a.str() + ", " + q.a.str(); });
		}
	auto t = cyclic_alphabet();
	for (int i = 0; i < 200; ++i)
	{
		HStarTimesShift s1{{gen::group_ring(rng, t, 3, 3), gen::group_ring(rng, t, 3, 3)}, rng.between(-3, 3)};
		HStarTimesShift s2{{gen::group_ring(rng, t, 3, 3), gen::group_ring(rng, t, 3, 3)}, rng.between(-3, 3)};
		HStarTimesShift prod = split_shifted(abels_mul(shifted_matrix(s1), shifted_matrix(s2)));
		out.require(wreath_quotient_map(prod.h, prod.k) ==
		                wreath_mul(wreath_quotient_map(s1.h, s1.k), wreath_quotient_map(s2.h, s2.k)),
		            [&] { return "wreath " + s1.h.str() + " " + s2.h.str(); });
	}
}

void normal_form_bijection(Outcome &out)
{
	for (int L = 0; L <= 4; ++L)
		out.require(normal_form_group_bijection_check(1, L), "n=1 L=" + std::to_string(L));
	for (int L = 0; L <= 3; ++L)
		out.require(normal_form_group_bijection_check(2, L), "n=2 L=" + std::to_string(L));
}

void enveloping_identities(Outcome &out)
{
	using namespace envelop;
	Rng rng(6);
	for (const auto &name : {"line", "solvable2"})
	{
		auto lie = LieStructure::named(name);
		for (int i = 0; i < 500; ++i)
		{
			PBWElt a = gen::pbw(rng, lie, 3, 2), b = gen::pbw(rng, lie, 3, 2);
			PBWElt c = gen::pbw(rng, lie, 3, 2), d = gen::pbw(rng, lie, 3, 2);
			auto l = static_cast<std::size_t>(rng.between(0, static_cast<long>(lie->dim()) - 1));
			out.require(lemma32_ad_check(lie, l, a, b), [&] { return std::string(name) + " ad " + a.str(); });
			out.require(lemma32_comm_check(lie, a, b, c, d), [&] { return std::string(name) + " comm " + a.str() + ", " + c.str(); });
		}
		for (int i = 0; i < 200; ++i)
		{
			PBWElt p = gen::pbw(rng, lie, 3, 3), q = gen::pbw(rng, lie, 3, 3), r = gen::pbw(rng, lie, 3, 3);
			out.require(antipode(p * q) == antipode(q) * antipode(p), [&] { return std::string(name) + " antipode " + p.str(); });
			out.require((p * q) * r == p * (q * r), [&] { return std::string(name) + " associativity " + p.str(); });
		}
	}
}

void witt_map(Outcome &out)
{
	using namespace envelop;
	out.require(bracket(OreElt::x_pow(1), OreElt::y()) == OreElt::constant(1), "[x,y] != 1");
	for (long i = -5; i <= 5; ++i)
		for (long j = -5; j <= 5; ++j)
			out.require(witt_bracket_check(i, j), "witt " + pair_str(i, j));
	Rng rng(7);
	for (int k = 0; k < 200; ++k)
	{
		OreElt p = gen::ore(rng, 3, 2, 3), q = gen::ore(rng, 3, 2, 3), r = gen::ore(rng, 3, 2, 3);
		out.require((p * q) * r == p * (q * r), [&] { return "ore associativity " + p.str(); });
	}
}

void corner_ring(Outcome &out)
{
	using namespace envelop;
	auto m = [](int a, int b, int c, long k = 1) { return CommPoly::monomial(a, b, c, Rational(k)); };
	struct Case
	{
		CommPoly f;
		bool in_i, in_i2, in_f_plus_i2;
	};
	std::vector<Case> cases{
	    {m(0, 1, 0), true, false, false},              // y
	    {m(1, 0, 0), false, false, false},             // x
	    {m(0, 2, 0) + m(1, 0, 2), true, true, true},   // y^2 + x z^2
	    {CommPoly(), true, true, true},                // 0
	    {m(0, 0, 0, 4), false, false, true},           // 4
	    {m(0, 0, 1), true, false, false},              // z
	    {m(0, 1, 1), true, true, true},                // y z
	    {m(2, 0, 0) + m(0, 0, 2), false, false, false},// x^2 + z^2
	    {m(0, 0, 0) + m(0, 0, 2), false, false, true}, // 1 + z^2
	    {m(0, 0, 0) + m(0, 0, 1), false, false, false},// 1 + z
	    {m(1, 1, 0), true, false, false},              // x y
	    {m(1, 1, 1, -2), true, true, true},            // -2 x y z
	    {m(0, 3, 0) - m(0, 0, 3), true, true, true},   // y^3 - z^3
	    {m(0, 1, 0) - m(0, 2, 0), true, false, false}, // y - y^2
	    {m(3, 0, 0, 5) + m(0, 1, 0), false, false, false},
	    {m(0, 0, 0, -1) + m(4, 2, 0), false, false, true},
	    {m(1, 0, 0) + m(0, 1, 1), false, false, false},
	    {m(2, 0, 1) + m(0, 1, 2), true, false, false},
	    {m(0, 0, 0, 3) + m(1, 1, 0), false, false, false},
	    {m(5, 0, 2), true, true, true},
	};
	for (const auto &c : cases)
	{
		out.require(sw_in_I(c.f) == c.in_i, "I membership of " + c.f.str());
		out.require(sw_in_I2(c.f) == c.in_i2, "I^2 membership of " + c.f.str());
		out.require(sw_in_F_plus_I2(c.f) == c.in_f_plus_i2, "F+I^2 membership of " + c.f.str());
	}
	Rng rng(8);
	for (int i = 0; i < 200; ++i)
	{
		SWMatrix a = gen::sw_matrix_in_R(rng, 3, 2), b = gen::sw_matrix_in_R(rng, 3, 2);
		out.require(sw_matrix_in_R(a) && sw_matrix_in_R(b) && sw_matrix_in_R(a * b), [&] { return "closure " + a.str(); });
	}
}

void hopf_and_twisted(Outcome &out)
{
	using namespace hopf;
	Rng rng(9);
	for (const auto &name : {"c2", "c3", "s3"})
	{
		auto grp = FiniteGroupTable::named(name);
		for (int i = 0; i < 300; ++i)
		{
			HopfElt h = gen::hopf_elt(rng, grp), a = gen::hopf_elt(rng, grp), b = gen::hopf_elt(rng, grp),
			        c = gen::hopf_elt(rng, grp);
			out.require(hopf_left_formula_check(h, a, b, c), [&] { return std::string(name) + " left formula"; });
			out.require(hopf_right_formula_check(h, a, b, c), [&] { return std::string(name) + " right formula"; });
			HopfMatrix m = HopfMatrix::lower(a, b, c);
			out.require(hopf_star_action(h, m) == hopf_star_action_by_coproduct(h, m),
			            [&] { return std::string(name) + " star action " + h.str(); });
			HopfMatrix k0 = HopfMatrix::lower(hopf_antipode(b), b, c);
			out.require(in_k0(hopf_star_action(h, k0)), [&] { return std::string(name) + " K0 stability " + h.str(); });
		}
	}

	using namespace twisted;
	auto c2 = FiniteGroupTable::named("c2");
	std::vector<std::pair<std::string, Cocycle>> accepted{
	    {"c2 constant", Cocycle::constant(c2)},
	    {"c3 constant", Cocycle::constant(FiniteGroupTable::named("c3"))},
	    {"s3 constant", Cocycle::constant(FiniteGroupTable::named("s3"))},
	    {"c2 sign", Cocycle::constant(c2).with_entry(1, 1, -1)},
	};
	for (const auto &[label, tau] : accepted)
	{
		out.require(cocycle_check(tau).ok, label + " rejected");
		int order = tau.group()->order();
		for (int x = 0; x < order; ++x)
			for (int y = 0; y < order; ++y)
			{
				Cocycle perturbed = tau.with_entry(x, y, tau(x, y) * 2);
				out.require(!cocycle_check(perturbed).ok, [&] {
					return label + ": doubling entry (" + tau.group()->element_name(x) + "," + tau.group()->element_name(y) +
					       ") still passes the cocycle identity";
				});
			}
	}

	for (const auto &name : {"c2", "c3", "s3"})
	{
		auto grp = FiniteGroupTable::named(name);
		auto alg = std::make_shared<const TwistedAlgebra>(gen::twisted_by_coboundary(rng, Cocycle::constant(grp)));
		for (int i = 0; i < 100; ++i)
		{
			TwistedElt p = gen::twisted_elt(rng, alg), q = gen::twisted_elt(rng, alg);
			out.require(trace(p * q) == trace(q * p), [&] { return std::string(name) + " trace symmetry " + p.str(); });
		}
	}
	auto plain = std::make_shared<const TwistedAlgebra>(Cocycle::constant(c2));
	TwistedElt e = (TwistedElt::basis(plain, 0) + TwistedElt::basis(plain, 1)).scaled(Rational(Integer(1), Integer(2)));
	IdempotentReport rep = idempotent_verify(e);
	out.require(rep.is_idempotent && rep.trace == Rational(Integer(1), Integer(2)), "(1+g)/2 idempotent with trace 1/2");
}

void determinism(Outcome &out)
{
	for (const auto &name : suite_names())
	{
		std::string first = run_suite(name, {}, 2026).dump();
		std::string second = run_suite(name, {}, 2026).dump();
		out.require(first == second, name + " report differs between runs");
	}
}

struct Criterion
{
	int number;
	std::string title;
	double limit_seconds; // 0 for no limit
	std::function<void(Outcome &)> run;
};

} // namespace

int main()
{
	std::vector<Criterion> criteria{
	    {1, "Stallings dichotomy, r=5 k=2, m,n in [-7,7]", 5, stallings_dichotomy},
	    {2, "Roos dichotomy and ad-power laws, s=6", 5, roos_dichotomy},
	    {3, "BS(2,3) normal forms, pi, Hopfian criterion, 1000 insertions", 10, baumslag_solitar},
	    {4, "Abels-type matrix identities and wreath quotient", 10, abels_identities},
	    {5, "normal monomials vs reduced words", 10, normal_form_bijection},
	    {6, "enveloping algebra matrix identities, antipode, associativity", 20, enveloping_identities},
	    {7, "Witt map into the localized Weyl algebra", 10, witt_map},
	    {8, "corner ring membership and closure", 10, corner_ring},
	    {9, "Hopf matrix formulas, cocycles, trace", 10, hopf_and_twisted},
	    {10, "byte-identical suite reports", 0, determinism},
	};
	int failed = 0;
	for (const auto &c : criteria)
	{
		Outcome out;
		auto start = std::chrono::steady_clock::now();
		try
		{
			c.run(out);
		}
		catch (const std::exception &ex)
		{
			out.require(false, std::string("exception: ") + ex.what());
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
		bool pass = out.passed() && in_time;
		failed += !pass;
		std::ostringstream line;
		line.precision(3);
		line << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << out.checks() - out.failed()
		     << "/" << out.checks() << " checks, " << std::fixed << secs << " s";
		if (c.limit_seconds > 0)
			line << ", limit " << c.limit_seconds << " s";
		line << "]";
		std::cout << line.str() << '\n';
		for (const auto &f : out.failures())
			std::cout << "    " << f << '\n';
		if (out.failed() > static_cast<long>(out.failures().size()))
			std::cout << "    ... " << out.failed() - static_cast<long>(out.failures().size()) << " more\n";
		if (!in_time)
			std::cout << "    over the time limit\n";
	}
	std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
	return failed ? 1 : 0;
}
