#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cusplab {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; every constructor below
// canonicalizes, and GMP arithmetic preserves the form.
using Rational = mpq_class;
using Integer = mpz_class;
using RatVec = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q"; throws errc::parse otherwise.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);

Rational rat_pow(const Rational& q, unsigned e);

Integer factorial(int n);

bool is_zero_vec(const RatVec& v);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& c, const RatVec& v);
RatVec& operator+=(RatVec& a, const RatVec& b);

}  // namespace cusplab
