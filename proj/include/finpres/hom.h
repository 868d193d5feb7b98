#pragma once

#include "finpres/permutation.h"
#include "finpres/word.h"

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>

namespace finpres {

/// Evaluation context for a homomorphism target.
template <class T>
concept GroupTarget = requires(const T &t, const typename T::Element &a) {
	{ t.identity() } -> std::convertible_to<typename T::Element>;
	{ t.multiply(a, a) } -> std::convertible_to<typename T::Element>;
	{ t.inverse(a) } -> std::convertible_to<typename T::Element>;
	{ t.equal(a, a) } -> std::convertible_to<bool>;
};

class MissingImage : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// Homomorphism out of the free group on `source`, fixed by generator images.
template <GroupTarget T>
class GroupHom
{
public:
	using Element = typename T::Element;

	GroupHom(AlphabetRef source, T target, std::map<int, Element> images)
	    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
	{
	}

	const T &target() const { return target_; }
	const AlphabetRef &source() const { return source_; }

	const Element &image(int index) const
	{
		auto it = images_.find(index);
		if (it == images_.end())
			throw MissingImage("no image for generator " + std::to_string(index));
		return it->second;
	}

	Element operator()(const GroupWord &w) const
	{
		if (w.alphabet()->id != source_->id)
			throw AlphabetMismatch("word is not over the homomorphism's source alphabet");
		Element acc = target_.identity();
		for (const auto &g : w.letters())
		{
			const Element &img = image(g.index);
			acc = target_.multiply(acc, g.sign > 0 ? img : target_.inverse(img));
		}
		return acc;
	}

private:
	AlphabetRef source_;
	T target_;
	std::map<int, Element> images_;
};

template <GroupTarget T>
typename T::Element hom_eval(const GroupHom<T> &h, const GroupWord &w)
{
	return h(w);
}

// ---------------------------------------------------------------------------
// registered targets

struct FreeGroupTarget
{
	using Element = GroupWord;
	AlphabetRef alphabet;

	Element identity() const { return GroupWord(alphabet); }
	Element multiply(const Element &a, const Element &b) const { return a * b; }
	Element inverse(const Element &a) const { return a.inverse(); }
	bool equal(const Element &a, const Element &b) const { return a == b; }
};

/// Element of a direct product of two free groups.
struct DirectProductWord
{
	GroupWord left;
	GroupWord right;

	DirectProductWord operator*(const DirectProductWord &o) const { return {left * o.left, right * o.right}; }
	DirectProductWord inverse() const { return {left.inverse(), right.inverse()}; }
	bool is_identity() const { return left.is_identity() && right.is_identity(); }
	bool operator==(const DirectProductWord &) const = default;
	std::string str() const { return "(" + left.str() + ", " + right.str() + ")"; }
};

struct DirectProductGroup
{
	using Element = DirectProductWord;
	AlphabetRef left;
	AlphabetRef right;

	Element identity() const { return {GroupWord(left), GroupWord(right)}; }
	Element multiply(const Element &a, const Element &b) const { return a * b; }
	Element inverse(const Element &a) const { return a.inverse(); }
	bool equal(const Element &a, const Element &b) const { return a == b; }
};

struct PermutationGroup
{
	using Element = Permutation;
	int r = 1;

	Element identity() const { return Permutation::identity(r); }
	Element multiply(const Element &a, const Element &b) const { return a.then(b); }
	Element inverse(const Element &a) const { return a.inverse(); }
	bool equal(const Element &a, const Element &b) const { return a == b; }
};

} // namespace finpres
