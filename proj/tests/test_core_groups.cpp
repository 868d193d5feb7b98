#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finpres/hom.h"
#include "finpres/permutation.h"
#include "finpres/random.h"
#include "finpres/stallings.h"
#include "finpres/word.h"

#include <map>

using namespace finpres;

namespace {

AlphabetRef xyz() { return make_alphabet(1, {"x", "y", "z"}); }

GroupWord w(const std::string &text) { return parse_word(xyz(), text); }

Generator letter(int index, int sign) { return {1, index, sign}; }

// Repeatedly deletes the leftmost cancelling pair; quadratic, but shares no code with the stack reduction.
std::vector<Generator> naive_reduce(std::vector<Generator> s)
{
	bool changed = true;
	while (changed)
	{
		changed = false;
		for (std::size_t i = 0; i + 1 < s.size(); ++i)
			if (s[i].index == s[i + 1].index && s[i].sign == -s[i + 1].sign)
			{
				s.erase(s.begin() + static_cast<long>(i), s.begin() + static_cast<long>(i) + 2);
				changed = true;
				break;
			}
	}
	return s;
}

std::vector<Generator> random_letters(Rng &rng, int rank, int max_length)
{
	std::vector<Generator> s;
	long len = rng.between(0, max_length);
	for (long i = 0; i < len; ++i)
		s.push_back(letter(static_cast<int>(rng.between(0, rank - 1)), rng.coin() ? 1 : -1));
	return s;
}

} // namespace

TEST_CASE("word_reduce examples")
{
	auto a = xyz();
	std::vector<Generator> s1{letter(0, 1), letter(0, -1)};
	CHECK(GroupWord::reduce(a, s1).is_identity());
	std::vector<Generator> s2{letter(0, 1), letter(1, 1), letter(1, -1), letter(0, 1)};
	CHECK(GroupWord::reduce(a, s2).str() == "x^2");
	std::vector<Generator> s3{letter(1, -1), letter(0, 1), letter(0, -1), letter(1, 1), letter(2, 1)};
	CHECK(GroupWord::reduce(a, s3).str() == "z");
}

TEST_CASE("word_reduce rejects letters from another alphabet")
{
	std::vector<Generator> s{{2, 0, 1}};
	CHECK_THROWS_AS(GroupWord::reduce(xyz(), s), AlphabetMismatch);
	std::vector<Generator> bad_index{letter(7, 1)};
	CHECK_THROWS(GroupWord::reduce(xyz(), bad_index));
}

TEST_CASE("multiplication, inverse, conjugate, commutator examples")
{
	CHECK((w("x") * w("x^-1")).is_identity());
	CHECK(w("x y").inverse() == w("y^-1 x^-1"));
	CHECK(word_mul(w("x y"), w("y^-1 z")) == w("x z"));
	CHECK(conjugate(w("x"), w("1")) == w("x"));
	CHECK(conjugate(w("x"), w("y")).str() == "y^-1 x y");
	CHECK(conjugate(w("y"), w("y")) == w("y"));
	CHECK(commutator(w("x"), w("x")).is_identity());
	CHECK(commutator(w("x"), w("y")).str() == "x^-1 y^-1 x y");
	CHECK(commutator(w("x y"), w("x y")).is_identity());
}

TEST_CASE("word parser")
{
	CHECK(w("x^-1 y^2 x").str() == "x^-1 y^2 x");
	CHECK(w("[x, y]") == commutator(w("x"), w("y")));
	CHECK(w("(x y)^2") == w("x y x y"));
	CHECK(w("(x y)^-1") == w("y^-1 x^-1"));
	CHECK(w("1").is_identity());
	CHECK_THROWS_AS(w("x q"), UndeclaredGenerator);
	try
	{
		w("x y^");
		FAIL("expected a parse error");
	}
	catch (const ParseError &e)
	{
		CHECK(e.position() == 4);
	}
	CHECK_THROWS_AS(w("(x y"), ParseError);
}

TEST_CASE("stack reduction matches the naive reduction on random letter strings")
{
	Rng rng(11);
	auto a = xyz();
	for (int i = 0; i < 500; ++i)
	{
		auto s = random_letters(rng, 3, 20);
		GroupWord r = GroupWord::reduce(a, s);
		CHECK(r.letters() == naive_reduce(s));
		// idempotent
		CHECK(GroupWord::reduce(a, r.letters()) == r);
	}
}

TEST_CASE("group axioms and conjugation law on random words")
{
	Rng rng(12);
	auto a = xyz();
	for (int i = 0; i < 300; ++i)
	{
		GroupWord u = gen::word(rng, a, 8), v = gen::word(rng, a, 8), t = gen::word(rng, a, 8);
		CHECK((u * v) * t == u * (v * t));
		CHECK(u * GroupWord(a) == u);
		CHECK(GroupWord(a) * u == u);
		CHECK((u * u.inverse()).is_identity());
		CHECK(conjugate(conjugate(u, v), t) == conjugate(u, v * t));
		CHECK(commutator(u, v).inverse() == commutator(v, u));
	}
}

TEST_CASE("homomorphism evaluation")
{
	auto phi = stallings::phi();
	auto src = stallings::source_alphabet();
	auto ab = stallings::left_alphabet();
	auto cd = stallings::right_alphabet();
	auto img = hom_eval(phi, GroupWord(src));
	CHECK(img.is_identity());
	auto x = hom_eval(phi, parse_word(src, "x"));
	CHECK(x.left == parse_word(ab, "a"));
	CHECK(x.right.is_identity());
	auto xy = hom_eval(phi, parse_word(src, "x y"));
	CHECK(xy.left == parse_word(ab, "a b"));
	CHECK(xy.right == parse_word(cd, "c"));

	CHECK_THROWS_AS(hom_eval(phi, w("x")), AlphabetMismatch);
	GroupHom<FreeGroupTarget> partial(src, FreeGroupTarget{ab}, {{0, parse_word(ab, "a")}});
	CHECK_THROWS_AS(partial(parse_word(src, "y")), MissingImage);
}

TEST_CASE("homomorphism property in every target")
{
	Rng rng(13);
	auto src = stallings::source_alphabet();
	auto phi = stallings::phi();
	auto theta = stallings::witness_theta({5, 2});
	for (int i = 0; i < 200; ++i)
	{
		GroupWord u = gen::word(rng, src, 10), v = gen::word(rng, src, 10);
		CHECK(phi(u * v) == phi(u) * phi(v));
		CHECK(theta(u * v) == theta(u).then(theta(v)));
		CHECK(theta(u.inverse()) == theta(u).inverse());
	}
}

TEST_CASE("permutations")
{
	Permutation id = Permutation::identity(5);
	Permutation t1 = perm_from_cycles(5, {{Symbol::Star, 2}});
	Permutation t2 = perm_from_cycles(5, {{Symbol::Bullet, 2}});
	Permutation t3 = perm_from_cycles(5, {{Symbol::Bullet, 3}});
	CHECK(perm_commutes(id, t1));
	CHECK_FALSE(perm_commutes(t1, t2));
	CHECK(perm_commutes(t1, t3));
	CHECK(t1.str() == "(2 *)");
	CHECK(id.str() == "()");
	CHECK(perm_from_cycles(5, {{0, 1, 2, 3, 4}}).str() == "(0 1 2 3 4)");
	CHECK_THROWS(perm_from_cycles(5, {{0, 5}}));
	CHECK_THROWS(perm_from_cycles(5, {{0, 1, 0}}));

	// right action: p then q applies p first
	Permutation p = perm_from_cycles(3, {{0, 1}});
	Permutation q = perm_from_cycles(3, {{1, 2}});
	CHECK(perm_compose(p, q).apply(0) == Label{2});
}

TEST_CASE("permutation composition against an explicit map oracle")
{
	Rng rng(14);
	auto random_perm = [&](int r) {
		Permutation p = Permutation::identity(r);
		for (int i = 0; i < 4; ++i)
		{
			long a = rng.between(-2, r - 1), b = rng.between(-2, r - 1);
			auto lab = [](long v) -> Label { return v == -2 ? Label{Symbol::Star} : v == -1 ? Label{Symbol::Bullet} : Label{static_cast<int>(v)}; };
			if (a != b)
				p = p.then(perm_from_cycles(r, {{lab(a), lab(b)}}));
		}
		return p;
	};
	for (int i = 0; i < 200; ++i)
	{
		Permutation p = random_perm(4), q = random_perm(4), s = random_perm(4);
		std::vector<Label> points{Symbol::Star, Symbol::Bullet, 0, 1, 2, 3};
		for (const auto &pt : points)
			CHECK(p.then(q).apply(pt) == q.apply(p.apply(pt)));
		CHECK(p.then(q).then(s) == p.then(q.then(s)));
		CHECK(perm_commutes(p, q) == perm_commutes(q, p));
		CHECK(p.then(p.inverse()).is_identity());
	}
}
