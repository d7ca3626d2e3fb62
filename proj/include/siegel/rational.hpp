#pragma once

#include <string>

#include <gmpxx.h>

namespace siegel {

using Integer = mpz_class;
using Rational = mpq_class;

// accepts "num" or "num/den" with an optional leading sign; result is in
// lowest terms with a positive denominator
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& q);

// true when p does not divide the reduced denominator; p must be prime
bool is_p_integral(const Rational& q, const Integer& p);

// image of a p-integral rational in Z/p, returned in [0, p)
Integer reduce_rational_mod_p(const Rational& q, const Integer& p);

Integer floor_rational(const Rational& q);

} // namespace siegel
