#pragma once

#include "klsig/inversion.hpp"

#include <string>
#include <vector>

namespace klsig {

/// Signed Kazhdan-Lusztig polynomials P^{lambda,w0}_{x,y} for the direction
/// w0(-rho), stored by index pair (x, y); zero unless x <= y.
class SignedKLTable {
 public:
  SignedKLTable(std::shared_ptr<const WeylGroup> g, Weight lambda, EpsilonGrading grading)
      : group_(std::move(g)), lambda_(std::move(lambda)), grading_(std::move(grading)),
        entries_(group_->size() * group_->size()) {}

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const Weight& lambda() const { return lambda_; }
  const EpsilonGrading& grading() const { return grading_; }

  /// P^{lambda,w0}_{x,y}.
  const IntPolynomial& operator()(Elem x, Elem y) const { return entries_[x * group_->size() + y]; }
  IntPolynomial& at(Elem x, Elem y) { return entries_[x * group_->size() + y]; }

  /// P^{lambda,w0}_{w0x,w0y}, the coefficient of ch_s L(y lambda) in the
  /// limit signature character of M(x lambda + w0(-rho)t).
  const IntPolynomial& reversed(Elem x, Elem y) const {
    const Elem w0 = group_->long_element();
    return (*this)(group_->multiply(w0, x), group_->multiply(w0, y));
  }
  /// a^{lambda,w0}_{w0x,w0y,1}.
  BigInt level_one(Elem x, Elem y) const {
    const int d = group_->length(x) - group_->length(y) - 1;
    if (d < 0 || d % 2 != 0) return 0;
    return reversed(x, y).coefficient(d / 2);
  }

  /// Number of entries obtained from rule b) without its side condition x > y.
  std::size_t relaxed_side_condition = 0;

  friend bool operator==(const SignedKLTable& a, const SignedKLTable& b) { return a.entries_ == b.entries_; }

 private:
  std::shared_ptr<const WeylGroup> group_;
  Weight lambda_;
  EpsilonGrading grading_;
  std::vector<IntPolynomial> entries_;
};

/// Checks that lambda is integral, regular and antidominant; the signed
/// machinery is only defined there.
inline void require_signed_domain(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_integral() || !rs.is_regular(lambda) || !rs.is_antidominant(lambda))
    throw DomainError("signed tables need an integral regular antidominant weight, got " + lambda.to_string());
}

/// (-1)^{epsilon(mu)} for mu that must lie in the root lattice.
inline int eps_sign(const EpsilonGrading& grading, const Weight& mu) {
  if (!grading.root_system().in_root_lattice(mu))
    throw InternalError("epsilon applied to " + mu.to_string() + " outside the root lattice");
  return grading.sign(mu);
}

/// (-1)^{epsilon(x lambda - y lambda)} P_{x,y}(-q).
inline IntPolynomial signed_kl_twist(KLTable& kl, const EpsilonGrading& grading, const Weight& lambda, Elem x,
                                     Elem y) {
  const WeylGroup& g = kl.group();
  if (!g.bruhat_leq(x, y)) return {};
  const IntPolynomial p = kl(x, y).negate_variable();
  return eps_sign(grading, g.act(x, lambda) - g.act(y, lambda)) == 1 ? p : -p;
}

inline SignedKLTable signed_table_twist(KLTable& kl, const EpsilonGrading& grading, const Weight& lambda) {
  require_signed_domain(kl.group().root_system(), lambda);
  SignedKLTable t(kl.group_ptr(), lambda, grading);
  const WeylGroup& g = kl.group();
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y) t.at(x, y) = signed_kl_twist(kl, grading, lambda, x, y);
  return t;
}

namespace detail {

/// (-1)^{epsilon((lambda, alpha_s^vee) x alpha_s)}.
inline int coherent_sign(const WeylGroup& g, const EpsilonGrading& grading, const Weight& lambda, Elem x, int s) {
  const auto& rs = g.root_system();
  Weight xa = g.act(x, rs.positive_roots()[g.generators()[static_cast<std::size_t>(s)]].weight);
  Rational c = rs.pairing(lambda, g.generators()[static_cast<std::size_t>(s)]);
  return eps_sign(grading, c * xa);
}

}  // namespace detail

/// The signed table computed from P_{x,x} = 1, vanishing off the Bruhat
/// order, and recursive rules a) and b), column by column in decreasing
/// length of y (indices refer to Q(x,y) := P^{lambda,w0}_{w0x,w0y}).
inline SignedKLTable signed_kl_recursive(std::shared_ptr<const WeylGroup> gp, const EpsilonGrading& grading,
                                         const Weight& lambda) {
  const WeylGroup& g = *gp;
  require_signed_domain(g.root_system(), lambda);
  const std::size_t n = g.size();
  std::vector<IntPolynomial> q(n * n);  // q[x*n+y] = Q(x,y)
  auto Q = [&](Elem x, Elem y) -> IntPolynomial& { return q[x * n + y]; };
  auto level1 = [&](Elem z, Elem y) -> BigInt {
    const int d = g.length(z) - g.length(y) - 1;
    if (d < 0 || d % 2 != 0) return 0;
    return Q(z, y).coefficient(d / 2);
  };
  std::size_t relaxed = 0;

  for (Elem y = n; y-- > 0;) {
    Q(y, y) = IntPolynomial(BigInt(1));
    if (y == g.long_element()) continue;
    int s = 0;
    while (g.length(g.right_mult(y, s)) < g.length(y)) ++s;
    const Elem Y = g.right_mult(y, s);  // Y > Ys = y
    const int sgn_y = detail::coherent_sign(g, grading, lambda, y, s);
    std::vector<Elem> sum_terms;  // z < zs with a(z, Y) != 0
    for (Elem z = 0; z < n; ++z)
      if (!g.is_right_descent(z, s) && level1(z, Y) != 0) sum_terms.push_back(z);

    // x < xs: rule b) for the column Y, solved for Q(x, Ys)
    for (Elem x = 0; x < n; ++x) {
      if (x == y || !g.bruhat_leq(y, x) || g.is_right_descent(x, s)) continue;
      if (!g.bruhat_less(Y, x)) ++relaxed;
      const Elem xs = g.right_mult(x, s);
      IntPolynomial r = detail::coherent_sign(g, grading, lambda, x, s) * Q(xs, Y) - Q(x, Y).shifted(1);
      for (Elem z : sum_terms) {
        if (!g.bruhat_leq(z, x)) continue;
        const int e = (g.length(z) - g.length(Y) - 1) / 2 + 1;
        r += (Q(x, z) * level1(z, Y)).shifted(static_cast<std::size_t>(e));
      }
      Q(x, y) = sgn_y == 1 ? r : -r;
    }
    // x > xs: rule a) applied to xs < x
    for (Elem x = 0; x < n; ++x) {
      if (x == y || !g.bruhat_leq(y, x) || !g.is_right_descent(x, s)) continue;
      const Elem xs = g.right_mult(x, s);
      const int sg = detail::coherent_sign(g, grading, lambda, xs, s);
      Q(x, y) = sg == 1 ? Q(xs, y) : -Q(xs, y);
    }
  }

  SignedKLTable t(gp, lambda, grading);
  const Elem w0 = g.long_element();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t.at(g.multiply(w0, x), g.multiply(w0, y)) = Q(x, y);
  t.relaxed_side_condition = relaxed;
  return t;
}

struct RuleViolation {
  std::string rule;
  Elem x, y;
  int s;
};

/// Checks rules a) and a') of the recursion on every applicable triple.
inline std::vector<RuleViolation> check_recursive_rules(const SignedKLTable& t) {
  const WeylGroup& g = t.group();
  const auto& rs = g.root_system();
  std::vector<RuleViolation> out;
  for (Elem y = 0; y < g.size(); ++y)
    for (Elem x = 0; x < g.size(); ++x) {
      if (!g.bruhat_leq(y, x)) continue;
      for (int s = 0; s < static_cast<int>(g.num_generators()); ++s) {
        if (!g.is_right_descent(y, s) && !g.is_right_descent(x, s)) {
          int sg = detail::coherent_sign(g, t.grading(), t.lambda(), x, s);
          if (t.reversed(x, y) != sg * t.reversed(g.right_mult(x, s), y)) out.push_back({"a", x, y, s});
        }
        const Elem sx = g.left_mult(s, x), sy = g.left_mult(s, y);
        if (g.length(sy) > g.length(y) && g.length(sx) > g.length(x)) {
          const std::size_t root = g.generators()[static_cast<std::size_t>(s)];
          Rational c = rs.pairing(g.act(x, t.lambda()), root);
          int sg = eps_sign(t.grading(), c * rs.positive_roots()[root].weight);
          if (t.reversed(x, y) != sg * t.reversed(sx, y)) out.push_back({"a'", x, y, s});
        }
      }
    }
  return out;
}

struct SignedMatrices {
  IntMatrix S;  // S[x][y] = P^{lambda,w0}_{w0x,w0y}(1)
  IntMatrix T;  // T[x][y] = (-1)^{l(x)-l(y)} P^{lambda,w0}_{y,x}(1)
};

inline IntMatrix signed_multiplicity(const SignedKLTable& t) {
  const WeylGroup& g = t.group();
  IntMatrix s(g.size(), g.size());
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y) s(x, y) = t.reversed(x, y).evaluate(1);
  return s;
}

inline IntMatrix signed_inversion(const SignedKLTable& t) {
  const WeylGroup& g = t.group();
  IntMatrix m(g.size(), g.size());
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y) m(x, y) = parity_sign(g.length(x) - g.length(y)) * t(y, x).evaluate(1);
  return m;
}

inline SignedMatrices signed_matrices(const SignedKLTable& t) { return {signed_multiplicity(t), signed_inversion(t)}; }

inline InversionReport verify_signed_inversion(const IntMatrix& s, const IntMatrix& t) { return verify_inversion(s, t); }

/// D_x = (-1)^{epsilon(x lambda - lambda)}.
inline std::vector<int> conjugation_diagonal(const WeylGroup& g, const EpsilonGrading& grading, const Weight& lambda) {
  std::vector<int> d(g.size());
  for (Elem x = 0; x < g.size(); ++x) d[x] = eps_sign(grading, g.act(x, lambda) - lambda);
  return d;
}

struct ConjugationMismatch {
  char matrix;  // 'S' or 'T'
  Elem x, y;
  BigInt value, expected;
};

struct ConjugationReport {
  bool ok = true;
  std::vector<int> diagonal;
  std::vector<ConjugationMismatch> mismatches;
};

/// Checks S = D Abar D and T = D Bbar D, where Abar and Bbar are the
/// classical matrices with P evaluated at -1.
inline ConjugationReport conjugation_check(KLTable& kl, const SignedMatrices& m, const EpsilonGrading& grading,
                                           const Weight& lambda) {
  const WeylGroup& g = kl.group();
  const Elem w0 = g.long_element();
  ConjugationReport rep;
  rep.diagonal = conjugation_diagonal(g, grading, lambda);
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y) {
      const int dd = rep.diagonal[x] * rep.diagonal[y];
      BigInt abar = g.bruhat_leq(y, x) ? kl(g.multiply(w0, x), g.multiply(w0, y)).evaluate(-1) : BigInt(0);
      BigInt bbar = g.bruhat_leq(y, x) ? parity_sign(g.length(x) - g.length(y)) * kl(y, x).evaluate(-1) : BigInt(0);
      if (m.S(x, y) != dd * abar) rep.mismatches.push_back({'S', x, y, m.S(x, y), dd * abar});
      if (m.T(x, y) != dd * bbar) rep.mismatches.push_back({'T', x, y, m.T(x, y), dd * bbar});
    }
  rep.ok = rep.mismatches.empty();
  return rep;
}

/// Pairs (x, y) where epsilon(w0 x lambda - w0 y lambda) and
/// epsilon(x lambda - y lambda) differ in parity.
inline std::vector<std::pair<Elem, Elem>> w0_parity_mismatches(const WeylGroup& g, const EpsilonGrading& grading,
                                                               const Weight& lambda) {
  std::vector<std::pair<Elem, Elem>> out;
  const Elem w0 = g.long_element();
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y) {
      if (!g.bruhat_leq(y, x)) continue;
      int a = eps_sign(grading, g.act(g.multiply(w0, x), lambda) - g.act(g.multiply(w0, y), lambda));
      int b = eps_sign(grading, g.act(x, lambda) - g.act(y, lambda));
      if (a != b) out.emplace_back(x, y);
    }
  return out;
}

/// The weights lambda_alpha^+ and lambda_alpha^- for nu_alpha = (lambda, alpha^vee) varpi_alpha.
struct WallWeights {
  Weight plus, minus;
};

inline WallWeights wall_weights(const WeylGroup& g, const Weight& lambda, int s) {
  const auto& rs = g.root_system();
  const std::size_t root = g.generators()[static_cast<std::size_t>(s)];
  // nu_alpha is defined through the fundamental weight dual to the simple
  // coroot, which needs alpha to be simple in the full system.
  std::size_t i = 0;
  while (i < rs.rank() && rs.simple_root(i) != rs.positive_roots()[root].weight) ++i;
  if (i == rs.rank()) throw DomainError("wall weights need a simple root of the full system");
  Weight nu = rs.pairing(lambda, root) * rs.fundamental_weight(i);
  WallWeights w{dominant_conjugate(rs, nu), dominant_conjugate(rs, -nu)};
  if (!rs.in_root_lattice(w.plus + w.minus))
    throw InternalError("lambda_alpha^+ + lambda_alpha^- not in the root lattice");
  return w;
}

/// Limit signature character of theta M(x lambda + w0(-rho)t) for x < xs,
/// in the basis of limit signature characters of Verma modules.
inline GrothendieckVector signed_theta_verma(const WeylGroup& g, const EpsilonGrading& grading, const Weight& lambda,
                                             Elem x, int s) {
  const Elem xs = g.right_mult(x, s);
  if (g.length(xs) < g.length(x))
    throw DomainError("signed_theta_verma needs x < xs; use signed_theta_verma_coherent");
  auto ww = wall_weights(g, lambda, s);
  const auto& rs = g.root_system();
  const std::size_t root = g.generators()[static_cast<std::size_t>(s)];
  Weight shift = rs.pairing(lambda, root) * g.act(x, rs.positive_roots()[root].weight);
  GrothendieckVector v{Basis::Verma, {}};
  v.add(xs, eps_sign(grading, ww.plus + ww.minus + shift));
  v.add(x, -eps_sign(grading, ww.plus + ww.minus));
  return v;
}

/// theta M(z) = -(-1)^{epsilon((lambda, alpha^vee) zs alpha)} theta M(zs) for z > zs.
inline GrothendieckVector signed_theta_verma_coherent(const WeylGroup& g, const EpsilonGrading& grading,
                                                      const Weight& lambda, Elem z, int s) {
  const Elem zs = g.right_mult(z, s);
  if (g.length(zs) > g.length(z)) return signed_theta_verma(g, grading, lambda, z, s);
  auto base = signed_theta_verma(g, grading, lambda, zs, s);
  const int sg = -detail::coherent_sign(g, grading, lambda, zs, s);
  GrothendieckVector v{Basis::Verma, {}};
  for (const auto& [e, c] : base.coords) v.add(e, sg * c);
  return v;
}

/// Limit signature character of theta L(x lambda + w0(-rho)t) in the basis ch_s L.
inline GrothendieckVector signed_theta_irr(const SignedKLTable& t, Elem x, int s) {
  const WeylGroup& g = t.group();
  GrothendieckVector v{Basis::Irreducible, {}};
  const Elem xs = g.right_mult(x, s);
  if (g.length(xs) < g.length(x)) return v;
  auto ww = wall_weights(g, t.lambda(), s);
  const auto& rs = g.root_system();
  const std::size_t root = g.generators()[static_cast<std::size_t>(s)];
  Weight shift = rs.pairing(t.lambda(), root) * g.act(x, rs.positive_roots()[root].weight);
  v.add(xs, eps_sign(t.grading(), ww.plus + ww.minus + shift));
  const int c = -eps_sign(t.grading(), ww.plus + ww.minus);
  for (Elem y = 0; y < g.size(); ++y)
    if (g.is_right_descent(y, s)) v.add(y, c * t.level_one(x, y));
  return v;
}

/// Row x of T from the rows of all z < x (compact form only), following the
/// four cases of the inductive argument.
inline std::vector<BigInt> signed_invert_step(const SignedKLTable& t, Elem x, int s, const IntMatrix& rows_below) {
  if (!t.grading().painting().is_compact_form())
    throw DomainError("signed_invert_step is only available for the empty painting");
  const WeylGroup& g = t.group();
  const Elem xs = g.right_mult(x, s);
  if (g.length(xs) > g.length(x))
    throw DomainError("signed_invert_step needs a right descent s of x; s" + std::to_string(s + 1) +
                      " is not one for " + g.word_string(x));
  std::vector<Elem> mu_terms;
  for (Elem y = 0; y < g.size(); ++y)
    if (g.is_right_descent(y, s) && t.level_one(xs, y) != 0) mu_terms.push_back(y);

  std::vector<BigInt> row(g.size(), BigInt(0));
  for (Elem z = 0; z < g.size(); ++z) {
    if (!g.bruhat_leq(z, x)) continue;
    const Elem zs = g.right_mult(z, s);
    const bool z_le = g.bruhat_leq(z, xs), zs_le = g.bruhat_leq(zs, xs);
    BigInt sum = 0;
    for (Elem y : mu_terms)
      if (g.bruhat_leq(z, y)) sum += t.level_one(xs, y) * rows_below(y, z);
    const bool z_up = g.length(zs) > g.length(z);
    if (z_le && zs_le)
      row[z] = z_up ? -rows_below(xs, z) - rows_below(xs, zs) + sum   // case 1
                    : rows_below(xs, z) + rows_below(xs, zs) + sum;   // case 2
    else if (!z_le)
      row[z] = rows_below(xs, zs) + sum;  // case 3
    else
      row[z] = -rows_below(xs, z) + sum;  // case 4
  }
  return row;
}

}  // namespace klsig
