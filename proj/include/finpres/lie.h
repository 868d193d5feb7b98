#pragma once

#include <stdexcept>

namespace finpres {

/// p.(ad q)^n: p.(ad q)^0 = p and p.(ad q)^{k+1} = [p.(ad q)^k, q].
///
/// Works for any type with a `bracket` overload reachable by ADL.
template <class T>
T ad_pow(T p, const T &q, int n)
{
	if (n < 0)
		throw std::invalid_argument("ad power must be nonnegative");
	for (int i = 0; i < n; ++i)
		p = bracket(p, q);
	return p;
}

} // namespace finpres
