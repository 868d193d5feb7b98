#pragma once

#include <compare>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace finpres {

/// A finite generating alphabet. Names are printing metadata; identity is the id.
struct Alphabet
{
	int id = 0;
	std::vector<std::string> names;

	std::size_t rank() const { return names.size(); }
	/// Index of a name, or -1.
	int find(const std::string &name) const;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(int id, std::vector<std::string> names);

class AlphabetMismatch : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// A signed free generator.
struct Generator
{
	int alphabet_id = 0;
	int index = 0;
	int sign = 1;

	Generator inverse() const { return {alphabet_id, index, -sign}; }
	bool cancels(const Generator &o) const { return index == o.index && sign == -o.sign; }
	auto operator<=>(const Generator &) const = default;
};

/// Freely reduced word in a free group. The empty word is the identity.
class GroupWord
{
public:
	explicit GroupWord(AlphabetRef alphabet);

	/// Single-pass stack reduction of an arbitrary letter sequence.
	static GroupWord reduce(AlphabetRef alphabet, std::span<const Generator> letters);
	/// Generator `index` raised to `exponent`.
	static GroupWord power_of(AlphabetRef alphabet, int index, long exponent);

	const AlphabetRef &alphabet() const { return alphabet_; }
	const std::vector<Generator> &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool is_identity() const { return letters_.empty(); }

	GroupWord operator*(const GroupWord &o) const;
	GroupWord inverse() const;
	GroupWord pow(long exponent) const;

	bool operator==(const GroupWord &o) const;
	/// Length-lexicographic order; only meaningful within one alphabet.
	bool operator<(const GroupWord &o) const;

	std::string str() const;

private:
	AlphabetRef alphabet_;
	std::vector<Generator> letters_;
};

GroupWord word_reduce(const AlphabetRef &alphabet, std::span<const Generator> letters);
GroupWord word_mul(const GroupWord &u, const GroupWord &v);
GroupWord word_inv(const GroupWord &u);
/// w^(g) = g^-1 w g.
GroupWord conjugate(const GroupWord &w, const GroupWord &g);
/// [u,v] = u^-1 v^-1 u v.
GroupWord commutator(const GroupWord &u, const GroupWord &v);

class ParseError : public std::runtime_error
{
public:
	ParseError(std::size_t position, const std::string &message);
	std::size_t position() const { return position_; }

private:
	std::size_t position_;
};

class UndeclaredGenerator : public ParseError
{
public:
	using ParseError::ParseError;
};

/// Parses the canonical word syntax: names with optional `^k`, `1` for the
/// identity, parenthesised subwords `(u)^k` and commutators `[u, v]`.
/// Whole-string variant; trailing garbage is a syntax error.
GroupWord parse_word(const AlphabetRef &alphabet, std::string_view text);

/// Parses the longest word starting at `pos` and advances `pos` past it.
GroupWord parse_word_at(const AlphabetRef &alphabet, std::string_view text, std::size_t &pos);

} // namespace finpres
