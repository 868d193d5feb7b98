#pragma once

#include <array>
#include <cstddef>

namespace finpres {

/// 3x3 matrix over a (possibly noncommutative) ring R, multiplied generically.
///
/// R needs copy construction, +, - and *. No zero element is required.
template <class R>
struct Mat3
{
	std::array<R, 9> e;

	const R &operator()(std::size_t i, std::size_t j) const { return e[i * 3 + j]; }
	R &operator()(std::size_t i, std::size_t j) { return e[i * 3 + j]; }

	Mat3 operator*(const Mat3 &o) const
	{
		Mat3 r = *this;
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j)
				r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
		return r;
	}

	Mat3 operator-(const Mat3 &o) const
	{
		Mat3 r = *this;
		for (std::size_t i = 0; i < 9; ++i)
			r.e[i] = e[i] - o.e[i];
		return r;
	}

	bool operator==(const Mat3 &o) const { return e == o.e; }
};

/// Lie bracket under the matrix product.
template <class R>
Mat3<R> matrix_bracket(const Mat3<R> &a, const Mat3<R> &b)
{
	return a * b - b * a;
}

} // namespace finpres
