#include "finpres/suites.h"

#include "finpres/bs.h"
#include "finpres/grouprings.h"
#include "finpres/hopf.h"
#include "finpres/ncpoly.h"
#include "finpres/pbw.h"
#include "finpres/random.h"
#include "finpres/roos.h"
#include "finpres/stallings.h"
#include "finpres/sw.h"
#include "finpres/twisted.h"
#include "finpres/weyl.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace finpres {

namespace {

using Defaults = std::map<std::string, std::string>;

const std::map<std::string, Defaults> &all_defaults()
{
	static const std::map<std::string, Defaults> table = {
	    {"stallings", {{"r", "5"}, {"k", "2"}, {"grid", "7"}}},
	    {"roos", {{"s", "6"}, {"step1", "8"}}},
	    {"bs", {{"m", "2"}, {"n", "3"}, {"samples", "1000"}, {"length", "12"}}},
	    {"abels", {{"group", "free2"}, {"samples", "500"}, {"wreath_samples", "200"}}},
	    {"lemma22", {{"n", "2"}, {"length", "3"}, {"samples", "200"}}},
	    {"lemma32", {{"structure", "line"}, {"samples", "500"}, {"property_samples", "200"}}},
	    {"witt", {{"range", "5"}, {"samples", "200"}}},
	    {"sw", {{"samples", "200"}}},
	    {"hopf", {{"group", "c2"}, {"samples", "300"}}},
	    {"twisted", {{"group", "c2"}, {"cocycle", "constant"}, {"samples", "300"}}},
	};
	return table;
}

class Params
{
public:
	Params(const std::string &suite, const SuiteParams &given, SuiteReport &report)
	    : suite_(suite), resolved_(report.parameters)
	{
		const Defaults &defaults = all_defaults().at(suite);
		for (const auto &[k, v] : given)
			if (!defaults.count(k))
				throw InvalidParameter("suite '" + suite + "' has no parameter '" + k + "'");
		resolved_ = defaults;
		for (const auto &[k, v] : given)
			resolved_[k] = v;
	}

	long integer(const std::string &key, long lo, long hi) const
	{
		const std::string &text = resolved_.at(key);
		long value = 0;
		try
		{
			std::size_t used = 0;
			value = std::stol(text, &used);
			if (used != text.size())
				throw std::invalid_argument(text);
		}
		catch (const std::exception &)
		{
			throw InvalidParameter(suite_ + ": parameter '" + key + "' must be an integer, got '" + text + "'");
		}
		if (value < lo || value > hi)
			throw InvalidParameter(suite_ + ": parameter '" + key + "' must lie in [" + std::to_string(lo) + ", " +
			                       std::to_string(hi) + "]");
		return value;
	}

	std::string choice(const std::string &key, const std::set<std::string> &allowed) const
	{
		const std::string &text = resolved_.at(key);
		if (!allowed.count(text))
			throw InvalidParameter(suite_ + ": parameter '" + key + "' has unsupported value '" + text + "'");
		return text;
	}

	const std::string &text(const std::string &key) const { return resolved_.at(key); }

private:
	std::string suite_;
	std::map<std::string, std::string> &resolved_;
};

// Pass count for one randomized identity, keeping the first counterexample.
struct Tally
{
	std::size_t total = 0;
	std::size_t ok = 0;
	Json first_failure;

	void record(bool pass, const std::function<Json()> &describe)
	{
		++total;
		if (pass)
			++ok;
		else if (first_failure.is_null())
			first_failure = describe();
	}

	void report(SuiteReport &r, const std::string &name, Json inputs) const
	{
		if (!first_failure.is_null())
			inputs["first_failure"] = first_failure;
		r.add(name, std::move(inputs), std::to_string(total) + "/" + std::to_string(total),
		      std::to_string(ok) + "/" + std::to_string(total), ok == total);
	}
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

void stallings_suite(SuiteReport &r, const Params &p)
{
	stallings::WitnessConfig cfg{static_cast<int>(p.integer("r", 2, 64)), 0};
	cfg.k = static_cast<int>(p.integer("k", 0, cfg.r - 1));
	long grid = p.integer("grid", 0, 50);
	auto theta = stallings::witness_theta(cfg);
	for (long m = -grid; m <= grid; ++m)
		for (long n = -grid; n <= grid; ++n)
		{
			GroupWord g = stallings::g_relator(m, n);
			Permutation image = theta(g);
			bool predicted = stallings::residue_predicts_separation(cfg, m, n);
			bool killed = stallings::check_relator_in_S(m, n);
			std::string expected = predicted ? "non-identity; phi kills" : "identity; phi kills";
			std::string actual = std::string(image.is_identity() ? "identity" : "non-identity") +
			                     (killed ? "; phi kills" : "; phi does not kill");
			r.add("relator_dichotomy", {{"m", m}, {"n", n}, {"theta", image.str()}}, expected, actual,
			      expected == actual);
		}
	for (long n = -grid; n <= grid; ++n)
		r.add_compare("conjugation_step", {{"n", n}}, "true", yes_no(stallings::step1_conjugation_check(n)));
}

void roos_suite(SuiteReport &r, const Params &p)
{
	roos::WitnessConfig cfg{static_cast<int>(p.integer("s", 1, 24))};
	long step1 = p.integer("step1", 0, 16);
	for (int m = 0; m <= cfg.s; ++m)
		for (int n = 0; n <= cfg.s; ++n)
		{
			NcPoly h = roos::h_relator(m, n);
			QMatrix image = roos::theta_eval(cfg, h);
			bool routes_agree = image == roos::theta_relator_by_brackets(cfg, m, n);
			bool killed = roos::phi_lie_eval(h).is_zero();
			std::string expected = std::string(m + n == cfg.s ? "nonzero" : "zero") + "; routes agree; phi kills";
			std::string actual = std::string(image.is_zero() ? "zero" : "nonzero") +
			                     (routes_agree ? "; routes agree" : "; routes differ") +
			                     (killed ? "; phi kills" : "; phi does not kill");
			r.add("relator_dichotomy", {{"m", m}, {"n", n}}, expected, actual, expected == actual);
		}
	for (int m = 0; m <= cfg.s; ++m)
		r.add_compare("u_ad_v_power", {{"m", m}}, "true", yes_no(roos::witness_ad_power_check(cfg, m)));
	for (int n = 0; n <= cfg.s; ++n)
		r.add_compare("w_ad_v_power", {{"n", n}}, "true", yes_no(roos::witness_w_ad_power_check(cfg, n)));
	for (int n = 0; n <= step1; ++n)
		r.add_compare("ad_identity_in_target", {{"n", n}}, "true", yes_no(roos::step1_ad_identity_check(n)));
}

void bs_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	long m = p.integer("m", -50, 50);
	long n = p.integer("n", -50, 50);
	if (m == 0 || n == 0)
		throw InvalidParameter("bs: m and n must be nonzero");
	long samples = p.integer("samples", 0, 1000000);
	int length = static_cast<int>(p.integer("length", 0, 200));
	bs::Params bp(m, n);
	const auto &ab = bs::alphabet();
	GroupWord a = GroupWord::power_of(ab, 0, 1);
	GroupWord b = GroupWord::power_of(ab, 1, 1);
	GroupWord relator = a.inverse() * b.pow(m) * a * b.pow(-n);

	bs::NormalForm rel_nf = bs::normal_form(bp, relator);
	r.add_compare("relator_normal_form", {{"word", relator.str()}}, "1", rel_nf.str());

	GroupWord w = commutator(conjugate(b, a), b);
	bs::NormalForm w_nf = bs::normal_form(bp, w);
	bool nontrivial = !w_nf.is_identity() && bs::is_pinch_free(bp, w_nf);
	r.add("commutator_nontrivial", {{"word", w.str()}, {"normal_form", w_nf.str()}}, "nonempty pinch-free",
	      nontrivial ? "nonempty pinch-free" : "trivial or pinched", nontrivial);
	if (m == 2 || m == -2)
	{
		GroupWord image = bs::pi(w);
		r.add_compare("pi_kills_commutator", {{"word", w.str()}, {"image", image.str()}}, "1",
		              bs::normal_form(bp, image).str());
	}

	for (auto [hm, hn, expected] : std::vector<std::tuple<long, long, bool>>{{2, 3, false}, {2, 4, true}, {10, 15, false}})
		r.add_compare("hopfian_criterion", {{"m", hm}, {"n", hn}}, yes_no(expected),
		              yes_no(bs::hopfian_criterion(hm, hn)));
	r.add("hopfian_criterion", {{"m", m}, {"n", n}}, "reported", yes_no(bs::hopfian_criterion(m, n)), true);

	Tally insertion, canonical;
	for (long i = 0; i < samples; ++i)
	{
		GroupWord u = gen::word(rng, ab, length);
		GroupWord v = gen::word(rng, ab, length);
		GroupWord g = gen::word(rng, ab, 3);
		GroupWord inserted = relator.pow(rng.coin() ? 1 : -1);
		if (rng.coin())
			inserted = conjugate(inserted, g);
		bs::NormalForm plain = bs::normal_form(bp, u * v);
		bs::NormalForm with = bs::normal_form(bp, u * inserted * v);
		insertion.record(plain == with, [&] {
			return Json{{"u", u.str()}, {"v", v.str()}, {"inserted", inserted.str()}};
		});
		canonical.record(bs::is_canonical(bp, plain), [&] { return Json{{"word", (u * v).str()}}; });
	}
	insertion.report(r, "relator_insertion_invariance", {{"samples", samples}, {"max_length", length}});
	canonical.report(r, "normal_form_canonical", {{"samples", samples}});
}

void abels_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	using namespace grouprings;
	std::string group = p.choice("group", {"free2", "z"});
	long samples = p.integer("samples", 0, 100000);
	long wreath_samples = p.integer("wreath_samples", 0, 100000);
	AlphabetRef alphabet = group == "z" ? cyclic_alphabet() : free2_alphabet();
	auto ring = [&] { return gen::group_ring(rng, alphabet, 3, 3); };

	Tally mul, inverse, conj, central, star_anti, star_inv, aug_span;
	for (long i = 0; i < samples; ++i)
	{
		HStarElt P{ring(), ring()};
		HStarElt Q{ring(), ring()};
		GroupWord g = gen::word(rng, alphabet, 3);
		auto describe = [&] {
			return Json{{"a", P.a.str()}, {"c", P.c.str()}, {"b", Q.a.str()}, {"d", Q.c.str()}, {"g", g.str()}};
		};

		mul.record(hstar_mul(P, Q).to_abels() == abels_mul(P.to_abels(), Q.to_abels()), describe);
		AbelsMatrix Pm = P.to_abels();
		inverse.record(hstar_inverse(P).to_abels() == abels_inverse(Pm) &&
		                   abels_mul(Pm, abels_inverse(Pm)) == AbelsMatrix::identity(alphabet),
		               describe);
		AbelsMatrix conj_generic = abels_mul(abels_mul(AbelsMatrix::embed(g.inverse()), Pm), AbelsMatrix::embed(g));
		conj.record(hstar_conj(g, P).to_abels() == conj_generic, describe);
		HStarElt expected_comm{GroupRingElt(alphabet), hstar_commutator_central(P.a, Q.a)};
		central.record(abels_commutator(Pm, Q.to_abels()) == expected_comm.to_abels(), describe);
		star_anti.record(star(P.a * Q.a) == star(Q.a) * star(P.a) && star(P.a + Q.a) == star(P.a) + star(Q.a),
		                 describe);
		star_inv.record(star(star(P.a)) == P.a, describe);

		GroupRingElt x = P.a;
		x.add_term(GroupWord(alphabet), -augmentation(x));
		aug_span.record(aug_recompose(alphabet, aug_decompose(x)) == x, [&] { return Json{{"x", x.str()}}; });
	}
	Json in{{"samples", samples}, {"group", group}};
	mul.report(r, "hstar_mul_matches_matrix_product", in);
	inverse.report(r, "hstar_inverse_matches_matrix_inverse", in);
	conj.report(r, "hstar_conj_matches_matrix_conjugation", in);
	central.report(r, "commutator_central_entry", in);
	star_anti.report(r, "star_antiautomorphism", in);
	star_inv.report(r, "star_involution", in);
	aug_span.report(r, "augmentation_ideal_span", in);

	if (group == "z")
	{
		Tally wreath;
		for (long i = 0; i < wreath_samples; ++i)
		{
			HStarTimesShift s1{{ring(), ring()}, rng.between(-3, 3)};
			HStarTimesShift s2{{ring(), ring()}, rng.between(-3, 3)};
			HStarTimesShift prod = split_shifted(abels_mul(shifted_matrix(s1), shifted_matrix(s2)));
			WreathElt lhs = wreath_quotient_map(prod.h, prod.k);
			WreathElt rhs = wreath_mul(wreath_quotient_map(s1.h, s1.k), wreath_quotient_map(s2.h, s2.k));
			wreath.record(lhs == rhs, [&] {
				return Json{{"a1", s1.h.a.str()}, {"k1", s1.k}, {"a2", s2.h.a.str()}, {"k2", s2.k}};
			});
		}
		wreath.report(r, "wreath_quotient_multiplicative", {{"samples", wreath_samples}});
	}
}

void lemma22_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	int n = static_cast<int>(p.integer("n", 1, 4));
	int length = static_cast<int>(p.integer("length", 0, 6));
	long samples = p.integer("samples", 0, 100000);
	for (int len = 0; len <= length; ++len)
	{
		BijectionReport b = normal_form_group_bijection(n, len);
		r.add("normal_form_group_bijection", {{"n", n}, {"length", len}},
		      "bijection", b.ok ? "bijection" : "mismatch", b.ok);
		r.checks.back().inputs["normal_monomials"] = b.normal_monomials;
		r.checks.back().inputs["reduced_words"] = b.reduced_words;
	}
	// Rewriting in a random order reaches the same normal form as the stack reduction.
	Tally confluence;
	auto rules = invertible_rules(n);
	AlphabetRef alphabet = invertible_alphabet(n);
	for (long i = 0; i < samples; ++i)
	{
		NcMonomial m;
		long len = rng.between(0, 2 * length + 4);
		for (long j = 0; j < len; ++j)
			m.push_back(static_cast<int>(rng.between(0, 2 * n - 1)));
		NcMonomial current = m;
		for (;;)
		{
			std::vector<std::pair<std::size_t, std::size_t>> sites;
			for (std::size_t k = 0; k < rules.size(); ++k)
				for (std::size_t pos : rule_occurrences(rules[k], current))
					sites.emplace_back(k, pos);
			if (sites.empty())
				break;
			auto [k, pos] = sites[static_cast<std::size_t>(rng.between(0, static_cast<long>(sites.size()) - 1))];
			NcPoly next = apply_rule(rules[k], current, pos);
			current = next.terms().begin()->first;
		}
		confluence.record(current == reduce_invertible_monomial(n, m),
		                  [&] { return Json{{"monomial", monomial_str(*alphabet, m)}}; });
	}
	confluence.report(r, "rewriting_confluence", {{"samples", samples}, {"n", n}});
}

void lemma32_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	using namespace envelop;
	std::set<std::string> names;
	for (const auto &s : LieStructure::registered_names())
		names.insert(s);
	LieRef lie = LieStructure::named(p.choice("structure", names));
	long samples = p.integer("samples", 0, 100000);
	long property_samples = p.integer("property_samples", 0, 100000);
	const long d = static_cast<long>(lie->dim());

	for (std::size_t i = 0; i < lie->dim(); ++i)
		for (std::size_t j = 0; j < lie->dim(); ++j)
		{
			PBWElt ei = PBWElt::generator(lie, i), ej = PBWElt::generator(lie, j);
			r.add_compare("straightening", {{"i", lie->basis()[i]}, {"j", lie->basis()[j]}},
			              lie_bracket_in_u(lie, j, i).str(), (ej * ei - ei * ej).str());
		}
	for (std::size_t i = 0; i < lie->dim(); ++i)
		r.add_compare("antipode_on_generator", {{"i", lie->basis()[i]}}, (-PBWElt::generator(lie, i)).str(),
		              antipode(PBWElt::generator(lie, i)).str());

	Tally ad, comm;
	for (long s = 0; s < samples; ++s)
	{
		auto l = static_cast<std::size_t>(rng.between(0, d - 1));
		PBWElt a = gen::pbw(rng, lie, 3, 2), b = gen::pbw(rng, lie, 3, 2);
		PBWElt c = gen::pbw(rng, lie, 3, 2), e = gen::pbw(rng, lie, 3, 2);
		ad.record(lemma32_ad_check(lie, l, a, b),
		          [&] { return Json{{"l", lie->basis()[l]}, {"a", a.str()}, {"b", b.str()}}; });
		comm.record(lemma32_comm_check(lie, a, b, c, e),
		            [&] { return Json{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"d", e.str()}}; });
	}
	Json in{{"structure", lie->name()}, {"samples", samples}};
	ad.report(r, "ad_closed_form", in);
	comm.report(r, "comm_closed_form", in);

	Tally anti, involution, assoc;
	for (long s = 0; s < property_samples; ++s)
	{
		PBWElt x = gen::pbw(rng, lie, 3, 2), y = gen::pbw(rng, lie, 3, 2), z = gen::pbw(rng, lie, 3, 2);
		auto describe = [&] { return Json{{"p", x.str()}, {"q", y.str()}, {"r", z.str()}}; };
		anti.record(antipode(x * y) == antipode(y) * antipode(x), describe);
		involution.record(antipode(antipode(x)) == x, describe);
		assoc.record((x * y) * z == x * (y * z), describe);
	}
	Json pin{{"structure", lie->name()}, {"samples", property_samples}};
	anti.report(r, "antipode_antiautomorphism", pin);
	involution.report(r, "antipode_involution", pin);
	assoc.report(r, "pbw_associativity", pin);
}

void witt_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	using namespace envelop;
	long range = p.integer("range", 0, 40);
	long samples = p.integer("samples", 0, 100000);
	OreElt x = OreElt::x_pow(1), y = OreElt::y();
	r.add_compare("xy_commutator", {}, "1", bracket(x, y).str());
	for (long k = -range; k <= range; ++k)
	{
		OreElt expected = OreElt::term(k, 1) - OreElt::x_pow(k - 1, Rational(k));
		r.add_compare("laurent_commutation", {{"n", k}}, expected.str(), (y * OreElt::x_pow(k)).str());
	}
	for (long i = -range; i <= range; ++i)
		for (long j = -range; j <= range; ++j)
		{
			OreElt actual = bracket(witt_theta(i), witt_theta(j));
			OreElt expected = witt_theta(i + j).scaled(Rational(i - j));
			r.add("witt_bracket", {{"i", i}, {"j", j}}, expected.str(), actual.str(),
			      actual == expected && witt_bracket_check(i, j));
		}
	Tally assoc;
	for (long s = 0; s < samples; ++s)
	{
		OreElt a = gen::ore(rng, 3, 2, 3), b = gen::ore(rng, 3, 2, 3), c = gen::ore(rng, 3, 2, 3);
		assoc.record((a * b) * c == a * (b * c),
		             [&] { return Json{{"p", a.str()}, {"q", b.str()}, {"r", c.str()}}; });
	}
	assoc.report(r, "ore_associativity", {{"samples", samples}});
}

struct SwCase
{
	envelop::CommPoly f;
	bool in_i;
	bool in_i2;
	bool in_f_plus_i2;
};

std::vector<SwCase> sw_cases()
{
	using envelop::CommPoly;
	auto m = [](int a, int b, int c, long coeff = 1) { return CommPoly::monomial(a, b, c, Rational(coeff)); };
	return {
	    {CommPoly(), true, true, true},
	    {m(0, 0, 0), false, false, true},
	    {m(0, 0, 0, -3), false, false, true},
	    {m(1, 0, 0), false, false, false},
	    {m(0, 1, 0), true, false, false},
	    {m(0, 0, 1), true, false, false},
	    {m(0, 2, 0) + m(1, 0, 2), true, true, true},
	    {m(0, 1, 1), true, true, true},
	    {m(3, 1, 0), true, false, false},
	    {m(2, 1, 1), true, true, true},
	    {m(0, 0, 0, 5) + m(0, 2, 0), false, false, true},
	    {m(0, 0, 0) + m(1, 0, 0), false, false, false},
	    {m(0, 1, 0) + m(0, 0, 1), true, false, false},
	    {m(0, 0, 3) - m(4, 2, 0), true, true, true},
	    {m(2, 0, 0), false, false, false},
	    {m(0, 0, 0, 2) + m(0, 1, 0), false, false, false},
	    {m(1, 1, 0) + m(0, 2, 2), true, false, false},
	    {m(0, 0, 0, -1) + m(5, 0, 2) + m(0, 1, 1), false, false, true},
	    {m(0, 3, 0) + m(1, 0, 0), false, false, false},
	    {m(1, 0, 1) + m(0, 1, 0, 7), true, false, false},
	};
}

void sw_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	using namespace envelop;
	long samples = p.integer("samples", 0, 100000);
	for (const auto &c : sw_cases())
	{
		std::string expected = "I=" + yes_no(c.in_i) + " I2=" + yes_no(c.in_i2) + " F+I2=" + yes_no(c.in_f_plus_i2);
		std::string actual =
		    "I=" + yes_no(sw_in_I(c.f)) + " I2=" + yes_no(sw_in_I2(c.f)) + " F+I2=" + yes_no(sw_in_F_plus_I2(c.f));
		r.add_compare("membership", {{"f", c.f.str()}}, expected, actual);
	}
	Tally closure;
	for (long s = 0; s < samples; ++s)
	{
		SWMatrix a = gen::sw_matrix_in_R(rng, 3, 2), b = gen::sw_matrix_in_R(rng, 3, 2);
		closure.record(sw_matrix_in_R(a) && sw_matrix_in_R(b) && sw_matrix_in_R(a * b),
		               [&] { return Json{{"A", a.str()}, {"B", b.str()}}; });
	}
	closure.report(r, "R_closed_under_product", {{"samples", samples}});
}

void hopf_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	using namespace hopf;
	GroupRef group = FiniteGroupTable::named(p.choice("group", {"c2", "c3", "s3"}));
	long samples = p.integer("samples", 0, 100000);
	for (int g = 0; g < group->order(); ++g)
	{
		HopfElt basis = HopfElt::basis(group, g);
		r.add_compare("counit_on_basis", {{"g", group->element_name(g)}}, "1", to_string(hopf_counit(basis)));
		r.add_compare("antipode_on_basis", {{"g", group->element_name(g)}},
		              HopfElt::basis(group, group->inverse(g)).str(), hopf_antipode(basis).str());
	}
	Tally left, right, star_action, k0, antipode_anti;
	for (long s = 0; s < samples; ++s)
	{
		HopfElt h = gen::hopf_elt(rng, group), a = gen::hopf_elt(rng, group);
		HopfElt b = gen::hopf_elt(rng, group), c = gen::hopf_elt(rng, group);
		auto describe = [&] { return Json{{"h", h.str()}, {"a", a.str()}, {"b", b.str()}, {"c", c.str()}}; };
		left.record(hopf_left_formula_check(h, a, b, c), describe);
		right.record(hopf_right_formula_check(h, a, b, c), describe);
		HopfMatrix M = HopfMatrix::lower(a, b, c);
		star_action.record(hopf_star_action(h, M) == hopf_star_action_by_coproduct(h, M), describe);
		HopfElt g = HopfElt::basis(group, static_cast<int>(rng.between(0, group->order() - 1)));
		HopfMatrix K = HopfMatrix::lower(hopf_antipode(b), b, c);
		k0.record(in_k0(hopf_star_action(g, K)) && in_k0(hopf_star_action(h, K)), describe);
		antipode_anti.record(hopf_antipode(a * b) == hopf_antipode(b) * hopf_antipode(a), describe);
	}
	Json in{{"group", group->name()}, {"samples", samples}};
	left.report(r, "left_product_formula", in);
	right.report(r, "right_product_formula", in);
	star_action.report(r, "star_action_closed_form", in);
	k0.report(r, "k0_stability", in);
	antipode_anti.report(r, "antipode_antiautomorphism", in);
}

twisted::Cocycle load_cocycle(const hopf::GroupRef &group, const std::string &source)
{
	if (source == "constant")
		return twisted::Cocycle::constant(group);
	if (source == "sign")
	{
		if (group->order() != 2)
			throw InvalidParameter("twisted: the sign cocycle is defined on c2 only");
		return twisted::Cocycle::constant(group).with_entry(1, 1, -1);
	}
	std::ifstream in(source);
	if (!in)
		throw InvalidParameter("twisted: cannot read cocycle file '" + source + "'");
	std::stringstream text;
	text << in.rdbuf();
	try
	{
		return twisted::parse_cocycle(group, text.str());
	}
	catch (const std::invalid_argument &e)
	{
		throw InvalidParameter("twisted: " + std::string(e.what()));
	}
}

std::string verdict_str(const hopf::GroupRef &group, const twisted::CocycleVerdict &v)
{
	if (v.ok)
		return "cocycle";
	const auto &[x, y, z] = *v.violation;
	return "fails at (" + group->element_name(x) + ", " + group->element_name(y) + ", " + group->element_name(z) + ")";
}

void twisted_suite(SuiteReport &r, const Params &p, Rng &rng)
{
	using namespace twisted;
	GroupRef group = FiniteGroupTable::named(p.choice("group", {"c2", "c3", "s3"}));
	Cocycle tau = load_cocycle(group, p.text("cocycle")).normalized();
	long samples = p.integer("samples", 0, 100000);

	CocycleVerdict triple = cocycle_check(tau);
	CocycleVerdict assoc = associativity_check(tau);
	r.add_compare("cocycle_identity", {{"group", group->name()}}, "cocycle", verdict_str(group, triple));
	r.add_compare("characterizations_agree", {{"group", group->name()}}, verdict_str(group, triple),
	              verdict_str(group, assoc));

	// Each entry doubled in turn: both characterizations must give the same verdict.
	for (int x = 0; x < group->order(); ++x)
		for (int y = 0; y < group->order(); ++y)
		{
			Cocycle perturbed = tau.with_entry(x, y, tau(x, y) * 2);
			CocycleVerdict v1 = cocycle_check(perturbed);
			CocycleVerdict v2 = associativity_check(perturbed);
			r.add_compare("perturbation_characterizations_agree",
			              {{"x", group->element_name(x)}, {"y", group->element_name(y)}, {"factor", 2}},
			              verdict_str(group, v1), verdict_str(group, v2));
		}

	// Random cohomologous tables are cocycles.
	Tally cohomologous;
	for (long s = 0; s < std::min<long>(samples, 50); ++s)
	{
		Cocycle other = gen::twisted_by_coboundary(rng, tau);
		bool ok = cocycle_check(other).ok == triple.ok && associativity_check(other).ok == triple.ok;
		cohomologous.record(ok, [] { return Json::object(); });
	}
	cohomologous.report(r, "coboundary_twist_preserves_verdict", {{"samples", cohomologous.total}});

	if (!triple.ok)
		return;
	auto algebra = std::make_shared<const TwistedAlgebra>(tau);
	for (int g = 0; g < group->order(); ++g)
		r.add_compare("trace_of_basis", {{"g", group->element_name(g)}}, g == 0 ? "1" : "0",
		              to_string(trace(TwistedElt::basis(algebra, g))));
	Tally symmetric, associative;
	for (long s = 0; s < samples; ++s)
	{
		TwistedElt a = gen::twisted_elt(rng, algebra), b = gen::twisted_elt(rng, algebra);
		TwistedElt c = gen::twisted_elt(rng, algebra);
		auto describe = [&] { return Json{{"alpha", a.str()}, {"beta", b.str()}, {"gamma", c.str()}}; };
		symmetric.record(trace(a * b) == trace(b * a), describe);
		associative.record((a * b) * c == a * (b * c), describe);
	}
	Json in{{"group", group->name()}, {"samples", samples}};
	symmetric.report(r, "trace_symmetry", in);
	associative.report(r, "twisted_associativity", in);

	// The averaging element of the untwisted algebra.
	auto plain = std::make_shared<const TwistedAlgebra>(Cocycle::constant(group));
	TwistedElt e(plain);
	for (int g = 0; g < group->order(); ++g)
		e.set(g, Rational(Integer(1), Integer(group->order())));
	IdempotentReport idem = idempotent_verify(e);
	r.add_compare("averaging_idempotent", {{"group", group->name()}, {"e", e.str()}},
	              "idempotent, trace " + to_string(Rational(Integer(1), Integer(group->order()))),
	              std::string(idem.is_idempotent ? "idempotent" : "not idempotent") + ", trace " +
	                  to_string(idem.trace));
}

} // namespace

std::vector<std::string> suite_names()
{
	return {"stallings", "roos", "bs", "abels", "lemma22", "lemma32", "witt", "sw", "hopf", "twisted"};
}

std::map<std::string, std::string> suite_defaults(const std::string &name)
{
	auto it = all_defaults().find(name);
	if (it == all_defaults().end())
		throw UnknownSuite("unknown suite '" + name + "'");
	return it->second;
}

SuiteReport run_suite(const std::string &name, const SuiteParams &given, std::uint64_t seed)
{
	if (!all_defaults().count(name))
		throw UnknownSuite("unknown suite '" + name + "'");
	auto start = std::chrono::steady_clock::now();
	SuiteReport report;
	report.suite = name;
	report.seed = seed;
	Params params(name, given, report);
	Rng rng(seed);
	try
	{
		if (name == "stallings")
			stallings_suite(report, params);
		else if (name == "roos")
			roos_suite(report, params);
		else if (name == "bs")
			bs_suite(report, params, rng);
		else if (name == "abels")
			abels_suite(report, params, rng);
		else if (name == "lemma22")
			lemma22_suite(report, params, rng);
		else if (name == "lemma32")
			lemma32_suite(report, params, rng);
		else if (name == "witt")
			witt_suite(report, params, rng);
		else if (name == "sw")
			sw_suite(report, params, rng);
		else if (name == "hopf")
			hopf_suite(report, params, rng);
		else
			twisted_suite(report, params, rng);
	}
	catch (const InvalidParameter &)
	{
		throw;
	}
	catch (const std::invalid_argument &e)
	{
		throw InvalidParameter(name + ": " + e.what());
	}
	report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	return report;
}

} // namespace finpres
