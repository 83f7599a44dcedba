#pragma once

#include <delannoy/ntheory.hpp>

#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace delannoy {

/// Dense univariate polynomial with exact integer coefficients.
/// coeffs()[d] is the coefficient of x^d; the zero polynomial has no
/// coefficients and no stored coefficient list ends in zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static IntPolynomial constant(const ExactInt& c) { return IntPolynomial(std::vector<ExactInt>{c}); }
  /// c * x^d
  static IntPolynomial monomial(const ExactInt& c, std::size_t d) {
    std::vector<ExactInt> v(d + 1);
    v[d] = c;
    return IntPolynomial(std::move(v));
  }

  std::span<const ExactInt> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  ExactInt coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : ExactInt(0); }

  ExactInt evaluate(const ExactInt& x) const {
    ExactInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) { return add_scaled(o, 1, 0); }
  IntPolynomial& operator-=(const IntPolynomial& o) { return add_scaled(o, -1, 0); }

  /// this += scale * x^shift * o
  IntPolynomial& add_scaled(const IntPolynomial& o, const ExactInt& scale, std::size_t shift) {
    if (o.is_zero() || scale == 0) return *this;
    if (coeffs_.size() < o.coeffs_.size() + shift) coeffs_.resize(o.coeffs_.size() + shift);
    for (std::size_t d = 0; d < o.coeffs_.size(); ++d) {
      mpz_addmul(coeffs_[d + shift].get_mpz_t(), o.coeffs_[d].get_mpz_t(), scale.get_mpz_t());
    }
    normalize();
    return *this;
  }

  IntPolynomial& operator*=(const ExactInt& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const ExactInt& s) { return a *= s; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    return IntPolynomial(std::move(out));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  /// Coefficientwise exact division by an integer; nullopt if any
  /// coefficient leaves a remainder.
  std::optional<IntPolynomial> divide_exact(const ExactInt& d) const {
    if (d == 0) throw std::domain_error("IntPolynomial: division by zero");
    std::vector<ExactInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "[c0,c1,...]" in ascending degree.
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i != 0) s += ',';
      s += coeffs_[i].get_str();
    }
    return s + "]";
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<ExactInt> coeffs_;
};

inline IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Successive powers base^0, base^1, ... built by repeated multiplication.
class PowerCache {
 public:
  explicit PowerCache(IntPolynomial base) : base_(std::move(base)) { powers_.push_back(IntPolynomial::constant(1)); }

  const IntPolynomial& operator[](std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

 private:
  IntPolynomial base_;
  std::deque<IntPolynomial> powers_;  // stable references across growth
};

}  // namespace delannoy
