#pragma once

#include "klsig/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace klsig {

/// Dense univariate polynomial with exact coefficients. Coefficient i is the
/// coefficient of var^i; trailing zeros are never stored, so the zero
/// polynomial has no coefficients at all.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(Coeff c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<Coeff> v(exponent + 1, Coeff(0));
    v[exponent] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return std::nullopt;
  }

  Coeff coefficient(long exponent) const {
    if (exponent < 0 || exponent >= static_cast<long>(coeffs_.size())) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(exponent)];
  }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Coeff evaluate(const Coeff& at) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// p(-var).
  Polynomial negate_variable() const {
    Polynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }

  /// var^k * p.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(k, Coeff(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// p / var^k; the low coefficients must vanish.
  Polynomial unshifted(std::size_t k) const {
    if (is_zero()) return {};
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) throw DomainError("polynomial not divisible by var^k");
    if (k >= coeffs_.size()) return {};
    return Polynomial(std::vector<Coeff>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form such as "1 + 2q^2".
  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Coeff& c = coeffs_[i];
      if (c == 0) continue;
      bool neg = c < 0;
      Coeff mag = neg ? Coeff(-c) : c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

/// Quotient and remainder over a field.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t bd = bc.size() - 1;
  if (rem.size() < bc.size()) return {RatPolynomial{}, a};
  std::vector<Rational> quot(rem.size() - bd, Rational(0));
  for (std::size_t i = rem.size(); i-- > bd;) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / bc[bd];
    quot[i - bd] = f;
    for (std::size_t j = 0; j <= bd; ++j) rem[i - bd + j] -= f * bc[j];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Monic greatest common divisor (zero only if both inputs are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.coefficients().back();
  return a * Rational(1 / lead);
}

/// Element of Q(t) kept in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(RatPolynomial num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(RatPolynomial num, RatPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const RatPolynomial& numerator() const { return num_; }
  const RatPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Order of vanishing at t = 0 (may be negative); nullopt for zero.
  std::optional<long> valuation() const {
    auto vn = num_.valuation();
    if (!vn) return std::nullopt;
    return static_cast<long>(*vn) - static_cast<long>(*den_.valuation());
  }

  /// Sign of the unit part t^{-k} f(t) at t = 0.
  int unit_sign() const {
    auto vn = num_.valuation();
    if (!vn) return 0;
    auto vd = den_.valuation();
    return num_.coefficient(static_cast<long>(*vn)).sign() * den_.coefficient(static_cast<long>(*vd)).sign();
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = RatPolynomial(Rational(1));
      return;
    }
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rational lead = den_.coefficients().back();
    if (lead != 1) {
      num_ *= Rational(1 / lead);
      den_ *= Rational(1 / lead);
    }
  }

  RatPolynomial num_;
  RatPolynomial den_;
};

}  // namespace klsig
