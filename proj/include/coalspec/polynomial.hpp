#ifndef COALSPEC_POLYNOMIAL_HPP
#define COALSPEC_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "coalspec/rational.hpp"

namespace coalspec {

// Univariate polynomial over Rational, coefficients stored lowest power
// first. Invariant: the last stored coefficient is nonzero; the zero
// polynomial stores nothing. The constant polynomial 1 doubles as the
// determinant of the empty (0x0) matrix.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static Polynomial constant(const Rational &v) { return Polynomial({v}); }
  static Polynomial one() { return constant(Rational(1)); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  // The zero polynomial has no degree.
  std::optional<int> degree() const {
    if (c_.empty())
      return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational> &coeffs() const { return c_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Rational &s, const Polynomial &p);
  Polynomial pow(unsigned e) const; // p^0 = 1, including for the zero polynomial
  Polynomial shifted_up(std::size_t k) const; // multiply by x^k

  // Exact division by x^k; throws if any of the k lowest coefficients is
  // nonzero (a violated theorem precondition downstream).
  Polynomial divided_by_power(std::size_t k) const;

  Rational eval(const Rational &at) const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial &a, const Polynomial &b) { return a.c_ != b.c_; }

  // Human form, descending powers: "x^3 - 2x", "0" for the zero polynomial.
  std::string str() const;
  // JSON form: rational strings, lowest power first.
  std::vector<std::string> coeff_strings() const;
  static Polynomial from_coeff_strings(const std::vector<std::string> &strs);

private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero())
      c_.pop_back();
  }
  std::vector<Rational> c_;
};

} // namespace coalspec

#endif
