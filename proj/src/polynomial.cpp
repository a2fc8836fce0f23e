#include "coalspec/polynomial.hpp"

#include <algorithm>

namespace coalspec {

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[i] = -c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return Polynomial();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational &s, const Polynomial &p) {
  std::vector<Rational> out(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    out[i] = s * p.c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Polynomial::one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0)
    return k == 0 ? *this : Polynomial();
  std::vector<Rational> out(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[i + k] = c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::divided_by_power(std::size_t k) const {
  if (k == 0)
    return *this;
  if (is_zero())
    return Polynomial();
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero())
      throw error("polynomial: inexact division by x^" + std::to_string(k));
  if (c_.size() <= k)
    return Polynomial();
  return Polynomial(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

Rational Polynomial::eval(const Rational &at) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * at + c_[i];
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational &a = c_[i];
    if (a.is_zero())
      continue;
    Rational mag = a.sign() < 0 ? -a : a;
    if (out.empty())
      out += a.sign() < 0 ? "-" : "";
    else
      out += a.sign() < 0 ? " - " : " + ";
    bool unit = (mag == Rational(1));
    if (i == 0 || !unit)
      out += mag.str();
    if (i >= 1) {
      out += "x";
      if (i >= 2)
        out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> Polynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto &a : c_)
    out.push_back(a.str());
  return out;
}

Polynomial Polynomial::from_coeff_strings(const std::vector<std::string> &strs) {
  std::vector<Rational> out;
  out.reserve(strs.size());
  for (const auto &s : strs)
    out.push_back(Rational::parse(s));
  return Polynomial(std::move(out));
}

} // namespace coalspec
