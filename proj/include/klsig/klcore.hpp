#pragma once

#include "klsig/polynomial.hpp"
#include "klsig/weyl.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace klsig {

struct KLOptions {
  /// Use the largest right descent of y instead of the smallest.
  bool largest_descent = false;
  /// Try the left-handed rule P_{x,y} = P_{sx,y} (s a left descent of y,
  /// sx > x) before the right-handed one.
  bool prefer_left_rule = false;
};

/// Memoized classical Kazhdan-Lusztig polynomials P_{x,y}, keyed by element
/// index. Entries are computed on demand; `fill()` computes all of them.
class KLTable {
 public:
  explicit KLTable(std::shared_ptr<const WeylGroup> group, KLOptions opts = {})
      : group_(std::move(group)), opts_(opts), memo_(group_->size() * group_->size()) {}

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }

  const IntPolynomial& operator()(Elem x, Elem y) {
    auto& slot = memo_[y * group_->size() + x];
    if (!slot) slot = compute(x, y);
    return *slot;
  }

  /// Coefficient of q^{(l(y)-l(z)-1)/2} in P_{z,y}.
  BigInt mu(Elem z, Elem y) {
    const int d = group_->length(y) - group_->length(z) - 1;
    if (d < 0 || d % 2 != 0 || !group_->bruhat_leq(z, y)) return 0;
    return (*this)(z, y).coefficient(d / 2);
  }

  void fill() {
    for (Elem y = 0; y < group_->size(); ++y)
      for (Elem x = 0; x < group_->size(); ++x) (*this)(x, y);
    frozen_ = true;
  }
  bool frozen() const { return frozen_; }

  /// Read-only access after `fill()`.
  const IntPolynomial& at(Elem x, Elem y) const {
    const auto& slot = memo_[y * group_->size() + x];
    if (!slot) throw InternalError("KL table read before fill");
    return *slot;
  }

 private:
  IntPolynomial compute(Elem x, Elem y) {
    const WeylGroup& g = *group_;
    if (x == y) return IntPolynomial(BigInt(1));
    if (!g.bruhat_leq(x, y)) return {};

    if (opts_.prefer_left_rule) {
      for (int s : g.left_descents(y)) {
        Elem sx = g.left_mult(s, x);
        if (g.length(sx) > g.length(x)) return (*this)(sx, y);
      }
    }
    auto desc = g.right_descents(y);
    const int s = opts_.largest_descent ? desc.back() : desc.front();
    const Elem xs = g.right_mult(x, s);
    if (g.length(xs) > g.length(x)) return (*this)(xs, y);

    // xs < x: P_{x,y} = P_{xs,y'} + q P_{x,y'} - sum_{z < y', zs < z} mu(z,y') q^{(l(y)-l(z))/2} P_{x,z}
    const Elem yp = g.right_mult(y, s);
    IntPolynomial r = (*this)(xs, yp) + (*this)(x, yp).shifted(1);
    for (Elem z = 0; z < g.size(); ++z) {
      if (z == yp || !g.bruhat_leq(x, z) || !g.bruhat_leq(z, yp)) continue;
      if (g.length(g.right_mult(z, s)) > g.length(z)) continue;
      BigInt m = mu(z, yp);
      if (m == 0) continue;
      const int e = g.length(y) - g.length(z);
      r -= ((*this)(x, z) * m).shifted(static_cast<std::size_t>(e / 2));
    }
    return r;
  }

  std::shared_ptr<const WeylGroup> group_;
  KLOptions opts_;
  std::vector<std::optional<IntPolynomial>> memo_;
  bool frozen_ = false;
};

inline const IntPolynomial& kl_polynomial(KLTable& t, Elem x, Elem y) { return t(x, y); }
inline BigInt mu_coefficient(KLTable& t, Elem z, Elem y) { return t.mu(z, y); }

/// [M(x lambda)_j : L(y lambda)]: coefficient of q^{(l(x)-l(y)-j)/2} in P_{w0x,w0y}.
inline BigInt jantzen_level_multiplicity(KLTable& t, Elem x, Elem y, int j) {
  const WeylGroup& g = t.group();
  const int d = g.length(x) - g.length(y) - j;
  if (j < 0 || d < 0 || d % 2 != 0) return 0;
  const Elem w0 = g.long_element();
  return t(g.multiply(w0, x), g.multiply(w0, y)).coefficient(d / 2);
}

}  // namespace klsig
