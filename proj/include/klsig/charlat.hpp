#pragma once

#include "klsig/inversion.hpp"
#include "klsig/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace klsig {

/// Finite weight-multiplicity map supported in
/// {reference - sum n_i alpha_i : n_i >= 0, sum n_i <= depth}.
struct TruncatedCharacter {
  Weight reference;
  int depth = 0;
  std::map<Weight, BigInt> coeffs;

  void add(const Weight& w, const BigInt& c) {
    if (c == 0) return;
    auto& slot = coeffs[w];
    slot += c;
    if (slot == 0) coeffs.erase(w);
  }
  BigInt at(const Weight& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? BigInt(0) : it->second;
  }
  BigInt total() const {
    BigInt s = 0;
    for (const auto& [w, c] : coeffs) s += c;
    return s;
  }
};

/// Height of reference - w if it lies in the nonnegative root cone, else -1.
inline int depth_below(const RootSystem& rs, const Weight& reference, const Weight& w) {
  auto n = rs.to_root_coords(reference - w);
  long long h = 0;
  for (const auto& c : n) {
    if (!is_integer(c) || c < 0) return -1;
    h += static_cast<long long>(to_integer(c));
  }
  return static_cast<int>(h);
}

inline bool in_window(const RootSystem& rs, const TruncatedCharacter& ch, const Weight& w) {
  int d = depth_below(rs, ch.reference, w);
  return d >= 0 && d <= ch.depth;
}

/// Every root-lattice offset n (n_i >= 0) with sum n_i <= depth.
inline std::vector<std::vector<int>> offsets_up_to(std::size_t rank, int depth) {
  std::vector<std::vector<int>> out;
  std::vector<int> n(rank, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == rank) {
      out.push_back(n);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      n[i] = k;
      rec(i + 1, left - k);
    }
    n[i] = 0;
  };
  rec(0, depth);
  return out;
}

/// Kostant partition function on all offsets of height <= depth.
inline std::map<std::vector<int>, BigInt> kostant_table(const RootSystem& rs, int depth) {
  auto all = offsets_up_to(rs.rank(), depth);
  std::map<std::vector<int>, BigInt> dp;
  for (const auto& n : all) dp[n] = 0;
  dp[std::vector<int>(rs.rank(), 0)] = 1;
  // unbounded multiset counting, one root at a time
  for (const auto& root : rs.positive_roots()) {
    std::vector<std::vector<int>> order = all;
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      int ha = 0, hb = 0;
      for (int v : a) ha += v;
      for (int v : b) hb += v;
      return ha != hb ? ha < hb : a < b;
    });
    for (const auto& n : order) {
      std::vector<int> prev(n.size());
      bool ok = true;
      for (std::size_t i = 0; i < n.size(); ++i) {
        prev[i] = n[i] - root.simple_coords[i];
        if (prev[i] < 0) ok = false;
      }
      if (ok) dp[n] += dp[prev];
    }
  }
  return dp;
}

/// Number of ways to write nu (given in simple-root coordinates) as a sum of positive roots.
inline BigInt kostant_partition(const RootSystem& rs, const std::vector<int>& nu) {
  int h = 0;
  for (int v : nu) {
    if (v < 0) return 0;
    h += v;
  }
  return kostant_table(rs, h).at(nu);
}

/// ch M(mu): highest weight mu - rho, multiplicities from the partition function.
inline TruncatedCharacter verma_character(const RootSystem& rs, const Weight& mu, int depth) {
  TruncatedCharacter ch{mu - rs.rho(), depth, {}};
  if (depth < 0) return ch;
  for (const auto& [n, c] : kostant_table(rs, depth)) {
    std::vector<long long> nl(n.begin(), n.end());
    ch.add(ch.reference - rs.from_root_coords(nl), c);
  }
  return ch;
}

/// ch L(x lambda) = sum_y B[x][y] ch M(y lambda), truncated to `depth` below x lambda - rho.
inline TruncatedCharacter irreducible_character(const WeylGroup& g, const IntMatrix& b, Elem x, const Weight& lambda,
                                                int depth) {
  const auto& rs = g.root_system();
  const Weight xl = g.act(x, lambda);
  TruncatedCharacter ch{xl - rs.rho(), depth, {}};
  for (Elem y = 0; y < g.size(); ++y) {
    if (b(x, y) == 0) continue;
    const Weight yl = g.act(y, lambda);
    const int shift = depth_below(rs, xl, yl);
    if (shift < 0) throw DomainError("y lambda is not below x lambda; lambda must be antidominant");
    if (shift > depth) continue;
    for (const auto& [w, c] : verma_character(rs, yl, depth - shift).coeffs) ch.add(w, b(x, y) * c);
  }
  return ch;
}

/// Multiplicities of the finite-dimensional module with dominant integral
/// highest weight hw, by Freudenthal's formula, down to the given depth.
inline TruncatedCharacter freudenthal_character(const RootSystem& rs, const Weight& hw, int depth) {
  if (!hw.is_integral() || !rs.is_dominant(hw)) throw DomainError("Freudenthal needs a dominant integral weight");
  TruncatedCharacter ch{hw, depth, {}};
  auto offsets = offsets_up_to(rs.rank(), depth);
  std::stable_sort(offsets.begin(), offsets.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int v : a) ha += v;
    for (int v : b) hb += v;
    return ha < hb;
  });
  const Weight hr = hw + rs.rho();
  const Rational top = rs.inner(hr, hr);
  std::map<Weight, BigInt> m;
  for (const auto& n : offsets) {
    std::vector<long long> nl(n.begin(), n.end());
    const Weight mu = hw - rs.from_root_coords(nl);
    if (mu == hw) {
      m[mu] = 1;
      continue;
    }
    Rational rhs = 0;
    for (const auto& root : rs.positive_roots()) {
      for (int k = 1;; ++k) {
        Weight up = mu + Rational(k) * root.weight;
        int d = depth_below(rs, hw, up);
        if (d < 0) break;
        auto it = m.find(up);
        if (it != m.end()) rhs += Rational(it->second) * rs.inner(up, root.weight);
      }
    }
    rhs *= 2;
    const Weight mr = mu + rs.rho();
    const Rational denom = top - rs.inner(mr, mr);
    if (denom == 0) {
      if (rhs != 0) throw InternalError("Freudenthal recursion inconsistent");
      continue;
    }
    Rational val = rhs / denom;
    BigInt v = to_integer(val);
    if (v != 0) m[mu] = v;
  }
  for (const auto& [w, c] : m) ch.add(w, c);
  return ch;
}

/// prod_{alpha > 0} (hw + rho, alpha^vee) / (rho, alpha^vee).
inline BigInt weyl_dimension(const RootSystem& rs, const Weight& hw) {
  if (!hw.is_integral() || !rs.is_dominant(hw)) throw DomainError("Weyl dimension needs a dominant integral weight");
  Rational d = 1;
  const Weight hr = hw + rs.rho();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) d *= rs.pairing(hr, k) / rs.pairing(rs.rho(), k);
  return to_integer(d);
}

struct CharacterComparison {
  bool equal = true;
  std::size_t weights_compared = 0;
  std::vector<std::pair<Weight, std::pair<BigInt, BigInt>>> differences;
};

/// Compares two characters on the intersection of their windows. An empty
/// intersection is an error rather than a vacuous pass.
inline CharacterComparison compare_on_common_window(const RootSystem& rs, const TruncatedCharacter& a,
                                                    const TruncatedCharacter& b) {
  CharacterComparison cmp;
  // enumerate the window of a and keep the points also in b's window
  for (const auto& n : offsets_up_to(rs.rank(), a.depth)) {
    std::vector<long long> nl(n.begin(), n.end());
    const Weight w = a.reference - rs.from_root_coords(nl);
    if (!in_window(rs, b, w)) continue;
    ++cmp.weights_compared;
    BigInt va = a.at(w), vb = b.at(w);
    if (va != vb) {
      cmp.equal = false;
      cmp.differences.push_back({w, {va, vb}});
    }
  }
  if (cmp.weights_compared == 0) throw DomainError("characters have disjoint truncation windows");
  return cmp;
}

}  // namespace klsig
