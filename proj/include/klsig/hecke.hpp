#pragma once

#include "klsig/polynomial.hpp"
#include "klsig/weyl.hpp"

#include <map>
#include <vector>

namespace klsig {

/// Laurent polynomial in v with integer coefficients.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(BigInt c, int e) {
    Laurent l;
    if (c != 0) l.c_[e] = std::move(c);
    return l;
  }
  bool is_zero() const { return c_.empty(); }
  BigInt coefficient(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? BigInt(0) : it->second;
  }
  const std::map<int, BigInt>& terms() const { return c_; }

  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [e1, c1] : a.c_)
      for (const auto& [e2, c2] : b.c_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }

 private:
  void add(int e, const BigInt& c) {
    auto& slot = c_[e];
    slot += c;
    if (slot == 0) c_.erase(e);
  }
  std::map<int, BigInt> c_;
};

/// Kazhdan-Lusztig polynomials read off the self-dual canonical basis of the
/// Hecke algebra, built by triangular completion from the bar involution on
/// the standard basis.
class HeckeOracle {
 public:
  static constexpr std::size_t kCap = 120;

  explicit HeckeOracle(const WeylGroup& g) : g_(g), n_(g.size()) {
    if (n_ > kCap) throw CapExceeded("Hecke oracle limited to groups of order " + std::to_string(kCap));
    build_r();
    build_h();
  }

  /// P_{x,w}(q).
  IntPolynomial kl(Elem x, Elem w) const {
    const int d = g_.length(w) - g_.length(x);
    const Laurent& h = h_[w][x];
    if (h.is_zero()) return {};
    std::vector<BigInt> c;
    for (const auto& [e, v] : h.terms()) {
      // h = sum_k p_k v^{d-2k}
      const int k2 = d - e;
      if (k2 < 0 || k2 % 2 != 0) throw InternalError("unexpected exponent in canonical basis element");
      const auto k = static_cast<std::size_t>(k2 / 2);
      if (c.size() <= k) c.resize(k + 1, BigInt(0));
      c[k] = v;
    }
    return IntPolynomial(std::move(c));
  }

 private:
  using Vec = std::vector<Laurent>;

  // right multiplication by H_s
  Vec times_hs(const Vec& a, int s) const {
    Vec r(n_);
    const Laurent shift = Laurent::monomial(1, -1) - Laurent::monomial(1, 1);
    for (Elem x = 0; x < n_; ++x) {
      if (a[x].is_zero()) continue;
      const Elem xs = g_.right_mult(x, s);
      r[xs] += a[x];
      if (g_.length(xs) < g_.length(x)) r[x] += a[x] * shift;
    }
    return r;
  }

  void build_r() {
    // bar(H_w) = bar(H_{ws}) (H_s + v - v^{-1})
    r_.assign(n_, Vec(n_));
    r_[0][0] = Laurent::monomial(1, 0);
    const Laurent c = Laurent::monomial(1, 1) - Laurent::monomial(1, -1);
    for (Elem w = 1; w < n_; ++w) {
      const int s = g_.word(w).back();
      const Elem ws = g_.right_mult(w, s);
      Vec v = times_hs(r_[ws], s);
      for (Elem x = 0; x < n_; ++x)
        if (!r_[ws][x].is_zero()) v[x] += r_[ws][x] * c;
      r_[w] = std::move(v);
    }
  }

  void build_h() {
    h_.assign(n_, Vec(n_));
    for (Elem w = 0; w < n_; ++w) {
      h_[w][w] = Laurent::monomial(1, 0);
      for (Elem x = w; x-- > 0;) {
        if (!g_.bruhat_leq(x, w)) continue;
        Laurent rhs;
        for (Elem y = x + 1; y <= w; ++y) {
          if (h_[w][y].is_zero() || r_[y][x].is_zero()) continue;
          rhs += h_[w][y].bar() * r_[y][x];
        }
        Laurent h;
        for (const auto& [e, coef] : rhs.terms())
          if (e > 0) h += Laurent::monomial(coef, e);
        if (!(h - h.bar() == rhs)) throw InternalError("canonical basis completion inconsistent");
        h_[w][x] = std::move(h);
      }
    }
  }

  const WeylGroup& g_;
  std::size_t n_;
  std::vector<Vec> r_;  // r_[y][x]: coefficient of H_x in bar(H_y)
  std::vector<Vec> h_;  // h_[w][x]
};

inline IntPolynomial hecke_oracle_kl(const HeckeOracle& oracle, Elem x, Elem y) { return oracle.kl(x, y); }

}  // namespace klsig
