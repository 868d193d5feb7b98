#pragma once

#include <gmpxx.h>

#include <string>

namespace finpres {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text for a rational: "p" when integral, otherwise "p/q".
inline std::string to_string(const Rational &q)
{
	return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

/// Parses "p" or "p/q" (optional sign); throws std::invalid_argument.
Rational parse_rational(const std::string &text);

} // namespace finpres
