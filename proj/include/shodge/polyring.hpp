#pragma once

// Dense univariate polynomials over the integers with arbitrary-precision
// coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shodge/error.hpp"

namespace shodge {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in one variable t, stored densely with coefficient i
/// belonging to t^i. Always canonical: no trailing zero coefficients, and the
/// zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coefficients)
      : coeffs_(std::move(coefficients)) {
    normalize();
  }

  IntPolynomial(std::initializer_list<long long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long long c : coefficients) coeffs_.emplace_back(c);
    normalize();
  }

  static IntPolynomial constant(const BigInt& c) {
    return IntPolynomial(std::vector<BigInt>{c});
  }

  static IntPolynomial one() { return constant(1); }

  /// c * t^degree
  static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  /// 1 - t^d
  static IntPolynomial one_minus_power(std::size_t d) {
    return one() - monomial(d);
  }

  /// 1 + t + ... + t^(d-1) = (1 - t^d) / (1 - t)
  static IntPolynomial geometric(std::size_t d) {
    return IntPolynomial(std::vector<BigInt>(d, BigInt(1)));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial; -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^i, zero beyond the degree.
  BigInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  const BigInt& leading() const { return coeffs_.back(); }

  BigInt eval(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  BigInt eval_at_one() const {
    BigInt acc = 0;
    for (const auto& c : coeffs_) acc += c;
    return acc;
  }

  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  IntPolynomial& operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& other) { return *this += -other; }

  IntPolynomial& operator*=(const IntPolynomial& other) {
    *this = *this * other;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
  }

  /// Human-readable form, e.g. "1 + t^2 + 2t^4".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Thrown when a polynomial division leaves a remainder. The remainder is the
/// last partial remainder of long division: either of lower degree than the
/// divisor, or one whose leading coefficient the divisor's does not divide.
class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(IntPolynomial remainder)
      : Error("polynomial division is not exact, remainder " + remainder.to_string()),
        remainder_(std::move(remainder)) {}

  const IntPolynomial& remainder() const noexcept { return remainder_; }

 private:
  IntPolynomial remainder_;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

/// Returns q with numerator == q * denominator, or throws NonExactDivision.
inline IntPolynomial poly_exact_div(const IntPolynomial& numerator,
                                   const IntPolynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& d = denominator.coefficients();
  const std::size_t dn = d.size() - 1;
  const BigInt& lead = d.back();

  std::vector<BigInt> rem = numerator.coefficients();
  if (rem.size() <= dn) {
    if (rem.empty()) return {};
    throw NonExactDivision(numerator);
  }
  std::vector<BigInt> q(rem.size() - dn);
  for (std::size_t k = rem.size(); k-- > dn;) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) {
      rem.resize(k + 1);
      throw NonExactDivision(IntPolynomial(std::move(rem)));
    }
    BigInt factor = rem[k] / lead;
    const std::size_t shift = k - dn;
    q[shift] = factor;
    for (std::size_t j = 0; j <= dn; ++j) rem[shift + j] -= factor * d[j];
  }
  IntPolynomial remainder(std::move(rem));
  if (!remainder.is_zero()) throw NonExactDivision(std::move(remainder));
  return IntPolynomial(std::move(q));
}

inline BigInt eval_at_one(const IntPolynomial& p) { return p.eval_at_one(); }

}  // namespace shodge
