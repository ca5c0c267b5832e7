#pragma once

#include "klsig/matrix.hpp"
#include "klsig/numeric.hpp"

#include <algorithm>
#include <functional>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace klsig {

/// A weight written in the fundamental-weight basis, so coordinate i is the
/// pairing with the i-th simple coroot.
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, Rational(0)) {}
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  static Weight from_ints(const std::vector<long long>& c) {
    Weight w(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) w.coords[i] = c[i];
    return w;
  }

  std::size_t rank() const { return coords.size(); }
  bool is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return is_integer(r); });
  }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r == 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  Weight& operator*=(const Rational& c) {
    for (auto& x : coords) x *= c;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
  }
};

/// A positive root with its simple-root expansion and the expansion of its
/// coroot in simple coroots.
struct Root {
  std::vector<int> simple_coords;
  std::vector<Rational> coroot_coords;
  Weight weight;
  int height() const {
    int h = 0;
    for (int c : simple_coords) h += c;
    return h;
  }
};

class RootSystem {
 public:
  static constexpr std::size_t kMaxRank = 4;

  const std::string& type_label() const { return label_; }
  char family() const { return family_; }
  std::size_t rank() const { return rank_; }

  /// cartan()(i, j) = (alpha_i, alpha_j^vee); row i is alpha_i in the fundamental-weight basis.
  const Matrix<Rational>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Weight& rho() const { return rho_; }

  Weight simple_root(std::size_t i) const { return Weight(cartan_.row(i)); }
  Weight fundamental_weight(std::size_t i) const {
    Weight w(rank_);
    w.coords[i] = 1;
    return w;
  }

  /// (mu, beta^vee) for the positive root with the given index.
  Rational pairing(const Weight& mu, std::size_t root_index) const {
    const auto& cc = positive_[root_index].coroot_coords;
    Rational acc(0);
    for (std::size_t j = 0; j < rank_; ++j) acc += cc[j] * mu.coords[j];
    return acc;
  }
  /// (mu, beta^vee) for an arbitrary root given by its simple-root expansion.
  Rational pairing_with_root(const Weight& mu, const std::vector<int>& simple_coords) const {
    auto idx = find_positive(simple_coords);
    if (idx) return pairing(mu, *idx);
    std::vector<int> neg(simple_coords.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -simple_coords[i];
    idx = find_positive(neg);
    if (!idx) throw DomainError("vector is not a root");
    return -pairing(mu, *idx);
  }

  std::optional<std::size_t> find_positive(const std::vector<int>& simple_coords) const {
    auto it = root_index_.find(simple_coords);
    if (it == root_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Expansion of mu in simple roots (rational in general).
  std::vector<Rational> to_root_coords(const Weight& mu) const {
    std::vector<Rational> n(rank_, Rational(0));
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t i = 0; i < rank_; ++i) n[j] += mu.coords[i] * cartan_inverse_(i, j);
    return n;
  }
  /// Integer simple-root expansion; throws if mu is not in the root lattice.
  std::vector<long long> root_lattice_coords(const Weight& mu) const {
    auto n = to_root_coords(mu);
    std::vector<long long> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      if (!is_integer(n[i])) throw DomainError("weight " + mu.to_string() + " is not in the root lattice");
      out[i] = static_cast<long long>(to_integer(n[i]));
    }
    return out;
  }
  bool in_root_lattice(const Weight& mu) const {
    auto n = to_root_coords(mu);
    return std::all_of(n.begin(), n.end(), [](const Rational& r) { return is_integer(r); });
  }
  Weight from_root_coords(const std::vector<long long>& n) const {
    Weight w(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) w.coords[j] += Rational(n[i]) * cartan_(i, j);
    return w;
  }

  Weight reflect_simple(const Weight& mu, std::size_t i) const {
    Weight out = mu;
    const Rational c = mu.coords[i];
    if (c == 0) return out;
    for (std::size_t j = 0; j < rank_; ++j) out.coords[j] -= c * cartan_(i, j);
    return out;
  }
  Weight reflect(const Weight& mu, std::size_t root_index) const {
    Rational c = pairing(mu, root_index);
    Weight out = mu;
    if (c != 0) out -= c * positive_[root_index].weight;
    return out;
  }

  /// Invariant inner product.
  Rational inner(const Weight& a, const Weight& b) const {
    Rational acc(0);
    for (std::size_t i = 0; i < rank_; ++i) {
      if (a.coords[i] == 0) continue;
      for (std::size_t j = 0; j < rank_; ++j) acc += a.coords[i] * b.coords[j] * fundamental_gram_(i, j);
    }
    return acc;
  }

  bool is_dominant(const Weight& mu) const {
    return std::all_of(mu.coords.begin(), mu.coords.end(), [](const Rational& r) { return r >= 0; });
  }
  /// No positive root pairs to a positive integer.
  bool is_antidominant(const Weight& mu) const {
    for (std::size_t k = 0; k < positive_.size(); ++k) {
      Rational p = pairing(mu, k);
      if (is_integer(p) && p > 0) return false;
    }
    return true;
  }
  bool is_regular(const Weight& mu) const {
    for (std::size_t k = 0; k < positive_.size(); ++k)
      if (pairing(mu, k) == 0) return false;
    return true;
  }

  /// True when the root with this simple-root expansion is positive.
  static bool is_positive_expansion(const std::vector<Rational>& n) {
    bool any = false;
    for (const auto& c : n) {
      if (c < 0) return false;
      if (c > 0) any = true;
    }
    return any;
  }

  friend std::shared_ptr<const RootSystem> build_root_system(const std::string& type_label);

 private:
  void finish();

  std::string label_;
  char family_ = 'A';
  std::size_t rank_ = 0;
  Matrix<Rational> sym_;  // (alpha_i, alpha_j)
  Matrix<Rational> cartan_;
  Matrix<Rational> cartan_inverse_;
  Matrix<Rational> fundamental_gram_;  // (varpi_i, varpi_j)
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> root_index_;
  Weight rho_;
};

namespace detail {

inline Matrix<Rational> invert(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  Matrix<Rational> a = m;
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw InternalError("singular Cartan matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace detail

inline void RootSystem::finish() {
  const std::size_t n = rank_;
  cartan_ = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_(i, j) = 2 * sym_(i, j) / sym_(j, j);
  cartan_inverse_ = detail::invert(cartan_);
  fundamental_gram_ = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fundamental_gram_(i, j) = cartan_inverse_(i, j) * sym_(j, j) / 2;

  // Closure of the simple roots under root strings, level by level in height.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<int>> all;
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), std::greater<>());
    all.insert(all.end(), level.begin(), level.end());
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        for (auto down = beta; down[i] > 0;) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        Rational pair(0);
        for (std::size_t j = 0; j < n; ++j) pair += Rational(beta[j]) * cartan_(j, i);
        Rational q = Rational(p) - pair;
        if (q > 0) {
          auto up = beta;
          ++up[i];
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(level.begin(), level.end());
  }

  positive_.clear();
  root_index_.clear();
  for (const auto& c : all) {
    Root r;
    r.simple_coords = c;
    std::vector<long long> cl(c.begin(), c.end());
    r.weight = from_root_coords(cl);
    Rational norm(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += Rational(c[i] * c[j]) * sym_(i, j);
    r.coroot_coords.resize(n);
    for (std::size_t j = 0; j < n; ++j) r.coroot_coords[j] = Rational(c[j]) * sym_(j, j) / norm;
    root_index_[c] = positive_.size();
    positive_.push_back(std::move(r));
  }
  // Stable order: height, then lexicographically descending expansion
  // (alpha_1 before alpha_2 at height one).
  std::stable_sort(positive_.begin(), positive_.end(),
                   [](const Root& a, const Root& b) { return a.height() < b.height(); });
  root_index_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) root_index_[positive_[k].simple_coords] = k;

  rho_ = Weight(n);
  for (auto& c : rho_.coords) c = 1;
}

/// Builds one of A1..A4, B2, B3, C3, D4, G2 with Bourbaki numbering.
inline std::shared_ptr<const RootSystem> build_root_system(const std::string& type_label) {
  static const std::set<std::string> supported = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
  if (!supported.count(type_label)) throw ConfigError("unsupported root system type '" + type_label + "'");
  auto rs = std::make_shared<RootSystem>();
  rs->label_ = type_label;
  rs->family_ = type_label[0];
  const std::size_t n = static_cast<std::size_t>(type_label[1] - '0');
  rs->rank_ = n;
  auto& s = rs->sym_;
  s = Matrix<Rational>(n, n);
  switch (rs->family_) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = 2;
        if (i + 1 < n) s(i, i + 1) = s(i + 1, i) = -1;
      }
      break;
    case 'B':  // alpha_n short
      for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = 2;
        if (i + 1 < n) s(i, i + 1) = s(i + 1, i) = -1;
      }
      s(n - 1, n - 1) = 1;
      break;
    case 'C':  // alpha_n long
      for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = 2;
        if (i + 1 < n) s(i, i + 1) = s(i + 1, i) = -1;
      }
      s(n - 1, n - 1) = 4;
      s(n - 2, n - 1) = s(n - 1, n - 2) = -2;
      break;
    case 'D':  // D4: alpha_2 is the branch node
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 2;
      s(0, 1) = s(1, 0) = -1;
      s(1, 2) = s(2, 1) = -1;
      s(1, 3) = s(3, 1) = -1;
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      s(0, 0) = 2;
      s(1, 1) = 6;
      s(0, 1) = s(1, 0) = -3;
      break;
    default:
      throw ConfigError("unsupported root system type '" + type_label + "'");
  }
  rs->finish();
  return rs;
}

/// Expected number of positive roots for each supported type.
inline std::size_t expected_positive_root_count(const std::string& label) {
  const char f = label[0];
  const std::size_t n = static_cast<std::size_t>(label[1] - '0');
  switch (f) {
    case 'A':
      return n * (n + 1) / 2;
    case 'B':
    case 'C':
      return n * n;
    case 'D':
      return n * (n - 1);
    case 'G':
      return 6;
    default:
      return 0;
  }
}

/// The set of simple roots declared non-compact. Indices are zero-based
/// internally; `from_one_based` validates user input against the rank.
class Painting {
 public:
  Painting() = default;
  Painting(std::size_t rank, const std::vector<std::size_t>& zero_based) : noncompact_(rank, false) {
    for (auto i : zero_based) {
      if (i >= rank) throw ConfigError("painting index " + std::to_string(i + 1) + " out of range");
      noncompact_[i] = true;
    }
  }
  static Painting from_one_based(std::size_t rank, const std::vector<long>& indices) {
    std::vector<std::size_t> z;
    for (long i : indices) {
      if (i < 1 || static_cast<std::size_t>(i) > rank)
        throw ConfigError("painting index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
      z.push_back(static_cast<std::size_t>(i - 1));
    }
    return Painting(rank, z);
  }
  /// All 2^rank paintings in binary-counter order.
  static std::vector<Painting> all(std::size_t rank) {
    std::vector<Painting> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
      std::vector<std::size_t> z;
      for (std::size_t i = 0; i < rank; ++i)
        if (mask & (std::size_t{1} << i)) z.push_back(i);
      out.emplace_back(rank, z);
    }
    return out;
  }

  std::size_t rank() const { return noncompact_.size(); }
  bool is_noncompact(std::size_t i) const { return noncompact_.at(i); }
  bool is_compact_form() const {
    return std::none_of(noncompact_.begin(), noncompact_.end(), [](bool b) { return b; });
  }
  std::vector<long> one_based() const {
    std::vector<long> out;
    for (std::size_t i = 0; i < noncompact_.size(); ++i)
      if (noncompact_[i]) out.push_back(static_cast<long>(i + 1));
    return out;
  }
  std::string to_string() const {
    std::string s = "{";
    auto ob = one_based();
    for (std::size_t k = 0; k < ob.size(); ++k) s += (k ? "," : "") + std::to_string(ob[k]);
    return s + "}";
  }
  friend bool operator==(const Painting&, const Painting&) = default;

 private:
  std::vector<bool> noncompact_;
};

/// Additive Z/2-grading of the root lattice determined by a painting.
class EpsilonGrading {
 public:
  EpsilonGrading(std::shared_ptr<const RootSystem> rs, Painting painting)
      : rs_(std::move(rs)), painting_(std::move(painting)) {
    if (painting_.rank() != rs_->rank()) throw ConfigError("painting rank does not match root system");
  }
  const Painting& painting() const { return painting_; }
  const RootSystem& root_system() const { return *rs_; }

  /// Parity of non-compact simple roots in the expansion of mu. Throws
  /// DomainError if mu is not in the root lattice.
  int operator()(const Weight& mu) const {
    auto n = rs_->root_lattice_coords(mu);
    long long acc = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
      if (painting_.is_noncompact(i)) acc += n[i];
    return static_cast<int>(((acc % 2) + 2) % 2);
  }
  /// (-1)^{epsilon(mu)}.
  int sign(const Weight& mu) const { return (*this)(mu) == 0 ? 1 : -1; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  Painting painting_;
};

inline int epsilon_of(const EpsilonGrading& grading, const Weight& mu) { return grading(mu); }

/// The unique dominant element of the Weyl orbit of mu.
inline Weight dominant_conjugate(const RootSystem& rs, Weight mu) {
  for (;;) {
    std::size_t i = 0;
    while (i < rs.rank() && mu.coords[i] >= 0) ++i;
    if (i == rs.rank()) return mu;
    mu = rs.reflect_simple(mu, i);
  }
}

/// Roots pairing integrally with lambda, and the simple system of their
/// positive part.
struct IntegralSubsystem {
  std::shared_ptr<const RootSystem> rs;
  Weight lambda;
  std::vector<std::size_t> positive;  // indices into rs->positive_roots()
  std::vector<std::size_t> simple;    // subset of `positive`

  std::size_t size() const { return 2 * positive.size(); }
  bool is_full() const { return positive.size() == rs->positive_roots().size(); }
};

inline IntegralSubsystem integral_subsystem(std::shared_ptr<const RootSystem> rs, const Weight& lambda) {
  if (lambda.rank() != rs->rank()) throw ConfigError("weight rank does not match root system");
  IntegralSubsystem sub{rs, lambda, {}, {}};
  const auto& pos = rs->positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (is_integer(rs->pairing(lambda, k))) sub.positive.push_back(k);
  std::set<std::vector<int>> members;
  for (auto k : sub.positive) members.insert(pos[k].simple_coords);
  for (auto k : sub.positive) {
    const auto& c = pos[k].simple_coords;
    bool decomposable = false;
    for (auto k2 : sub.positive) {
      const auto& a = pos[k2].simple_coords;
      std::vector<int> rest(c.size());
      bool ok = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        rest[i] = c[i] - a[i];
        if (rest[i] < 0) ok = false;
      }
      if (ok && members.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.simple.push_back(k);
  }
  return sub;
}

/// Parses a weight given as comma-separated rationals in the
/// fundamental-weight basis, or the symbolic forms "-rho", "-2rho", "k*rho".
inline Weight parse_weight(const RootSystem& rs, const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  auto pos = t.find("rho");
  if (pos != std::string::npos) {
    if (pos + 3 != t.size()) throw ConfigError("malformed weight '" + text + "'");
    std::string factor = t.substr(0, pos);
    if (!factor.empty() && factor.back() == '*') factor.pop_back();
    Rational f(1);
    if (factor == "-")
      f = -1;
    else if (!factor.empty() && factor != "+") {
      try {
        f = Rational(factor);
      } catch (const std::exception&) {
        throw ConfigError("malformed weight '" + text + "'");
      }
    }
    return f * rs.rho();
  }
  Weight w;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.coords.emplace_back(item);
    } catch (const std::exception&) {
      throw ConfigError("malformed weight coordinate '" + item + "'");
    }
  }
  if (w.rank() != rs.rank()) throw ConfigError("weight '" + text + "' has wrong number of coordinates");
  return w;
}

}  // namespace klsig
