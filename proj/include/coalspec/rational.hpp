#ifndef COALSPEC_RATIONAL_HPP
#define COALSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "coalspec/error.hpp"

namespace coalspec {

using Integer = mpz_class;

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. All arithmetic is exact; there is no floating point anywhere
// in this library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Integer &n) : v_(n) {}
  Rational(const Integer &num, const Integer &den) : v_(num, den) {
    if (sgn(den) == 0)
      throw error("rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Strict text form: optional sign, integer, optional "/" + positive integer.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  // "n" or "n/d", canonical form.
  std::string str() const { return v_.get_str(); }

  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero())
      throw error("rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }

private:
  mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const char *msg) -> parse_error { return parse_error(std::string("rational: ") + msg, i); };
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9')
    ++i;
  if (i == num_begin)
    throw fail("expected digits");
  Integer num(std::string(text.substr(num_begin, i - num_begin)), 10);
  if (negative)
    num = -num;
  Integer den(1);
  if (i < text.size()) {
    if (text[i] != '/')
      throw fail("unexpected character");
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9')
      ++i;
    if (i == den_begin || i != text.size())
      throw fail("malformed denominator");
    den = Integer(std::string(text.substr(den_begin)), 10);
    if (sgn(den) <= 0)
      throw fail("denominator must be positive");
  }
  return Rational(num, den);
}

// binomial(n, k) with the usual out-of-range convention: 0 for k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (n < 0)
    throw error("binomial: negative n");
  if (k < 0 || k > n)
    return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

} // namespace coalspec

#endif
