#include "cusplab/rational.hpp"

#include "cusplab/errors.hpp"

namespace cusplab {

Rational make_rational(long num, long den) {
  if (den == 0) throw error(errc::parse, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw error(errc::parse, "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(Integer(text), 1);
      q.canonicalize();
      return q;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw error(errc::parse, "rational with zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw error(errc::parse, "cannot parse rational literal: " + text);
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }

Rational rat_pow(const Rational& q, unsigned e) {
  Rational out(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec operator*(const Rational& c, const RatVec& v) {
  RatVec out(v);
  for (auto& x : out) x *= c;
  return out;
}

RatVec& operator+=(RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace cusplab
