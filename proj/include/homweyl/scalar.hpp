#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace homweyl {

using Integer = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Exact rational scalar; an element of the coefficient field K.
///
/// Values are always canonical: positive denominator, gcd(|num|, den) = 1,
/// zero stored as 0/1. All arithmetic is exact; nothing in this library
/// ever rounds.
using Scalar = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Renders a scalar as "a" or "a/b" (denominator suppressed when 1).
inline std::string to_string(const Scalar& s) { return s.str(); }

/// Parses a rational literal: int ("/" posint)?, e.g. "7", "-3/2".
inline Scalar scalar_from_string(std::string_view text)
{
	auto fail = [&] { throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
	std::size_t i = 0;
	if (i < text.size() && (text[i] == '+' || text[i] == '-'))
		++i;
	std::size_t digits = 0;
	while (i < text.size() && text[i] >= '0' && text[i] <= '9')
		++i, ++digits;
	if (digits == 0)
		fail();
	if (i < text.size())
	{
		if (text[i] != '/')
			fail();
		++i;
		std::size_t den_begin = i, den_digits = 0;
		while (i < text.size() && text[i] >= '0' && text[i] <= '9')
			++i, ++den_digits;
		if (den_digits == 0 || i != text.size())
			fail();
		if (std::string_view den = text.substr(den_begin); den.find_first_not_of('0') == std::string_view::npos)
			throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
	}
	return Scalar(std::string(text));
}

inline Integer factorial(unsigned n)
{
	Integer r = 1;
	for (unsigned i = 2; i <= n; ++i)
		r *= i;
	return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	if (k > n - k)
		k = n - k;
	Integer r = 1;
	for (unsigned i = 0; i < k; ++i)
	{
		r *= n - i;
		r /= i + 1; // always exact: r is a running binomial
	}
	return r;
}

/// n (n-1) ... (n-k+1); the coefficient produced by k derivatives of y^n.
inline Integer falling_factorial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	Integer r = 1;
	for (unsigned i = 0; i < k; ++i)
		r *= n - i;
	return r;
}

} // namespace homweyl
