#pragma once

#include "finpres/bs.h"
#include "finpres/word.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace finpres {

/// lhs = rhs; a bare relator r is stored as r = 1.
struct Relation
{
	GroupWord lhs;
	GroupWord rhs;
};

struct PresentationSpec
{
	AlphabetRef alphabet;
	std::vector<Relation> relations;

	const std::vector<std::string> &generators() const { return alphabet->names; }

	/// "<a,b | a^-1 b^2 a = b^3>"; parse_presentation reads it back.
	std::string str() const;
	/// Same generator names and same relations, word by word.
	bool operator==(const PresentationSpec &o) const;
};

/// <gens | relations>, relations separated by commas. Throws ParseError with
/// the offending position, or UndeclaredGenerator.
PresentationSpec parse_presentation(std::string_view text);

/// Two generators t, s with the single relation t^-1 s^m t = s^n.
struct BaumslagSolitarShape
{
	bs::Params params;
	int stable_letter;
	int base_letter;
};

/// Recognizes a Baumslag-Solitar presentation in either letter order.
std::optional<BaumslagSolitarShape> recognize_baumslag_solitar(const PresentationSpec &spec);

} // namespace finpres
