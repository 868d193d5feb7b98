#include "finpres/presentation.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>

namespace finpres {

namespace {

// Each parsed presentation gets its own group context.
int fresh_alphabet_id()
{
	static std::atomic<int> next{100000};
	return next++;
}

bool name_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

void skip_space(std::string_view text, std::size_t &pos)
{
	while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
		++pos;
}

void expect(std::string_view text, std::size_t &pos, char ch)
{
	skip_space(text, pos);
	if (pos >= text.size() || text[pos] != ch)
		throw ParseError(pos, std::string("expected '") + ch + "'");
	++pos;
}

bool accept(std::string_view text, std::size_t &pos, char ch)
{
	skip_space(text, pos);
	if (pos < text.size() && text[pos] == ch)
	{
		++pos;
		return true;
	}
	return false;
}

// Exponent of a word that is a single generator power, or nullopt.
std::optional<std::pair<int, long>> as_power(const GroupWord &w)
{
	if (w.is_identity())
		return std::nullopt;
	const auto &letters = w.letters();
	int index = letters.front().index;
	long exp = 0;
	for (const auto &l : letters)
	{
		if (l.index != index)
			return std::nullopt;
		exp += l.sign;
	}
	return std::make_pair(index, exp);
}

} // namespace

PresentationSpec parse_presentation(std::string_view text)
{
	std::size_t pos = 0;
	expect(text, pos, '<');
	std::vector<std::string> names;
	std::set<std::string> seen;
	do
	{
		skip_space(text, pos);
		std::size_t start = pos;
		if (pos >= text.size() || !name_start(text[pos]))
			throw ParseError(pos, "expected generator name");
		while (pos < text.size() && name_char(text[pos]))
			++pos;
		std::string name(text.substr(start, pos - start));
		if (!seen.insert(name).second)
			throw ParseError(start, "generator '" + name + "' declared twice");
		names.push_back(std::move(name));
	} while (accept(text, pos, ','));

	PresentationSpec spec{make_alphabet(fresh_alphabet_id(), names), {}};
	if (accept(text, pos, '|'))
	{
		do
		{
			skip_space(text, pos);
			std::size_t start = pos;
			GroupWord lhs = parse_word_at(spec.alphabet, text, pos);
			if (pos == start)
				throw ParseError(pos, "expected relator");
			GroupWord rhs(spec.alphabet);
			if (accept(text, pos, '='))
			{
				skip_space(text, pos);
				std::size_t rhs_start = pos;
				rhs = parse_word_at(spec.alphabet, text, pos);
				if (pos == rhs_start)
					throw ParseError(pos, "expected word after '='");
			}
			spec.relations.push_back({std::move(lhs), std::move(rhs)});
		} while (accept(text, pos, ','));
	}
	expect(text, pos, '>');
	skip_space(text, pos);
	if (pos != text.size())
		throw ParseError(pos, "trailing characters after presentation");
	return spec;
}

std::string PresentationSpec::str() const
{
	std::string out = "<";
	for (std::size_t i = 0; i < alphabet->names.size(); ++i)
		out += (i ? "," : "") + alphabet->names[i];
	if (!relations.empty())
	{
		out += " | ";
		for (std::size_t i = 0; i < relations.size(); ++i)
		{
			if (i)
				out += ", ";
			out += relations[i].lhs.str();
			if (!relations[i].rhs.is_identity())
				out += " = " + relations[i].rhs.str();
		}
	}
	return out + ">";
}

bool PresentationSpec::operator==(const PresentationSpec &o) const
{
	if (alphabet->names != o.alphabet->names || relations.size() != o.relations.size())
		return false;
	// letters carry their alphabet id, which differs between two parses
	auto same_word = [](const GroupWord &u, const GroupWord &v) {
		return std::equal(u.letters().begin(), u.letters().end(), v.letters().begin(), v.letters().end(),
		                  [](const Generator &g, const Generator &h) { return g.index == h.index && g.sign == h.sign; });
	};
	for (std::size_t i = 0; i < relations.size(); ++i)
		if (!same_word(relations[i].lhs, o.relations[i].lhs) || !same_word(relations[i].rhs, o.relations[i].rhs))
			return false;
	return true;
}

std::optional<BaumslagSolitarShape> recognize_baumslag_solitar(const PresentationSpec &spec)
{
	if (spec.alphabet->rank() != 2 || spec.relations.size() != 1)
		return std::nullopt;
	const auto &[lhs, rhs] = spec.relations.front();
	auto right = as_power(rhs);
	const auto &letters = lhs.letters();
	if (!right || letters.size() < 3)
		return std::nullopt;
	const auto &first = letters.front();
	const auto &last = letters.back();
	if (first.index != last.index || first.sign != -1 || last.sign != 1 || first.index == right->first)
		return std::nullopt;
	GroupWord middle = GroupWord::reduce(spec.alphabet, std::span(letters).subspan(1, letters.size() - 2));
	auto inner = as_power(middle);
	if (!inner || inner->first != right->first || right->second == 0)
		return std::nullopt;
	return BaumslagSolitarShape{bs::Params(inner->second, right->second), first.index, right->first};
}

} // namespace finpres
