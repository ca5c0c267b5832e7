#pragma once

#include "klsig/klcore.hpp"
#include "klsig/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace klsig {

enum class Basis { Verma, Irreducible };

/// Finitely supported integer combination of [M(x lambda)] or [L(x lambda)].
struct GrothendieckVector {
  Basis basis = Basis::Verma;
  std::map<Elem, BigInt> coords;

  void add(Elem x, const BigInt& c) {
    if (c == 0) return;
    auto& slot = coords[x];
    slot += c;
    if (slot == 0) coords.erase(x);
  }
  BigInt at(Elem x) const {
    auto it = coords.find(x);
    return it == coords.end() ? BigInt(0) : it->second;
  }
  friend bool operator==(const GrothendieckVector& a, const GrothendieckVector& b) {
    return a.basis == b.basis && a.coords == b.coords;
  }
};

using IntMatrix = Matrix<BigInt>;

/// A[x][y] = P_{w0x,w0y}(1): multiplicity of L(y lambda) in M(x lambda).
inline IntMatrix multiplicity_matrix(KLTable& t) {
  const WeylGroup& g = t.group();
  const Elem w0 = g.long_element();
  IntMatrix a(g.size(), g.size());
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y)
      if (g.bruhat_leq(y, x)) a(x, y) = t(g.multiply(w0, x), g.multiply(w0, y)).evaluate(1);
  return a;
}

/// B[x][y] = (-1)^{l(x)-l(y)} P_{y,x}(1): coefficient of ch M(y lambda) in ch L(x lambda).
inline IntMatrix inversion_matrix(KLTable& t) {
  const WeylGroup& g = t.group();
  IntMatrix b(g.size(), g.size());
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y)
      if (g.bruhat_leq(y, x)) b(x, y) = parity_sign(g.length(x) - g.length(y)) * t(y, x).evaluate(1);
  return b;
}

struct MatrixEntry {
  std::size_t row, col;
  BigInt value, expected;
};

struct InversionReport {
  bool ok = true;
  std::vector<MatrixEntry> violations;  // entries of A*B or B*A differing from the identity
};

inline InversionReport verify_inversion(const IntMatrix& a, const IntMatrix& b) {
  InversionReport rep;
  for (const auto& p : {a * b, b * a})
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) {
        BigInt expect = i == j ? 1 : 0;
        if (p(i, j) != expect) {
          rep.ok = false;
          rep.violations.push_back({i, j, p(i, j), expect});
        }
      }
  return rep;
}

/// theta M(x lambda) = [M(x lambda)] + [M(xs lambda)].
inline GrothendieckVector theta_verma(const WeylGroup& g, Elem x, int s) {
  GrothendieckVector v{Basis::Verma, {}};
  v.add(x, 1);
  v.add(g.right_mult(x, s), 1);
  return v;
}

/// a_{w0x,w0y,1}: coefficient of q^{(l(x)-l(y)-1)/2} in P_{w0x,w0y}.
inline BigInt level_one(KLTable& t, Elem x, Elem y) { return jantzen_level_multiplicity(t, x, y, 1); }

/// theta L(x lambda) in the irreducible basis.
inline GrothendieckVector theta_irr(KLTable& t, Elem x, int s) {
  const WeylGroup& g = t.group();
  GrothendieckVector v{Basis::Irreducible, {}};
  const Elem xs = g.right_mult(x, s);
  if (g.length(xs) < g.length(x)) return v;
  v.add(x, 2);
  v.add(xs, 1);
  for (Elem y = 0; y < g.size(); ++y)
    if (g.is_right_descent(y, s)) v.add(y, level_one(t, x, y));
  return v;
}

/// Row x of the inversion matrix from the rows of all z < x, by applying
/// theta to ch L(xs lambda) and peeling off the known terms.
inline std::vector<BigInt> coherent_invert_step(KLTable& t, Elem x, int s, const IntMatrix& rows_below) {
  const WeylGroup& g = t.group();
  const Elem xs = g.right_mult(x, s);
  if (g.length(xs) > g.length(x))
    throw DomainError("coherent_invert_step needs a right descent s of x; s" + std::to_string(s + 1) +
                      " is not one for " + g.word_string(x));
  std::vector<Elem> mu_terms;  // z with z > zs and a_{w0xs,w0z,1} != 0
  for (Elem z = 0; z < g.size(); ++z)
    if (g.is_right_descent(z, s) && level_one(t, xs, z) != 0) mu_terms.push_back(z);

  std::vector<BigInt> row(g.size(), BigInt(0));
  for (Elem w = 0; w < g.size(); ++w) {
    if (!g.bruhat_leq(w, x)) continue;
    const Elem ws = g.right_mult(w, s);
    const bool w_le = g.bruhat_leq(w, xs), ws_le = g.bruhat_leq(ws, xs);
    BigInt sum = 0;
    for (Elem z : mu_terms)
      if (g.bruhat_leq(w, z)) sum += level_one(t, xs, z) * rows_below(z, w);
    if (w_le && ws_le)  // case 1
      row[w] = -rows_below(xs, w) + rows_below(xs, ws) - sum;
    else if (!w_le)  // case 2: w <= x only
      row[w] = rows_below(xs, ws) - sum;
    else  // case 3: w <= xs, ws not <= xs
      row[w] = -rows_below(xs, w) - sum;
  }
  return row;
}

/// The full inversion matrix built row by row with coherent_invert_step,
/// always using the smallest right descent.
inline IntMatrix inversion_by_induction(KLTable& t) {
  const WeylGroup& g = t.group();
  IntMatrix b(g.size(), g.size());
  b(0, 0) = 1;
  for (Elem x = 1; x < g.size(); ++x) {
    auto row = coherent_invert_step(t, x, g.right_descents(x).front(), b);
    for (Elem w = 0; w < g.size(); ++w) b(x, w) = row[w];
  }
  return b;
}

}  // namespace klsig
