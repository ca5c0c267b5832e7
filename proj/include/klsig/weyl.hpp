#pragma once

#include "klsig/rootsys.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace klsig {

/// Elements are referred to by their position in the group's fixed total
/// order (length, then lexicographic reduced word).
using Elem = std::size_t;

struct WeylElement {
  Weight canonical_key;          // image of the base point
  std::vector<int> reduced_word;  // generator indices, leftmost first
  int length = 0;
};

/// A finite reflection group generated by reflections in a chosen simple
/// system: either all of W, or W_lambda for an integral subsystem.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1152;

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }

  std::size_t size() const { return elements_.size(); }
  std::size_t num_generators() const { return generators_.size(); }
  /// Positive-root index of each generator.
  const std::vector<std::size_t>& generators() const { return generators_; }

  const WeylElement& element(Elem x) const { return elements_[x]; }
  int length(Elem x) const { return elements_[x].length; }
  const std::vector<int>& word(Elem x) const { return elements_[x].reduced_word; }
  Elem identity() const { return 0; }
  Elem long_element() const { return elements_.size() - 1; }
  int max_length() const { return elements_.back().length; }

  Elem right_mult(Elem x, int s) const { return right_[x][static_cast<std::size_t>(s)]; }
  Elem left_mult(int s, Elem x) const { return left_[x][static_cast<std::size_t>(s)]; }
  Elem simple(int s) const { return right_mult(identity(), s); }

  Elem multiply(Elem x, Elem y) const {
    Elem r = y;
    const auto& w = word(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = left_mult(*it, r);
    return r;
  }
  Elem inverse(Elem x) const {
    Elem r = identity();
    for (int s : word(x)) r = left_mult(s, r);
    return r;
  }

  bool is_right_descent(Elem x, int s) const { return length(right_mult(x, s)) < length(x); }
  bool is_left_descent(Elem x, int s) const { return length(left_mult(s, x)) < length(x); }
  std::vector<int> right_descents(Elem x) const {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(num_generators()); ++s)
      if (is_right_descent(x, s)) out.push_back(s);
    return out;
  }
  std::vector<int> left_descents(Elem x) const {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(num_generators()); ++s)
      if (is_left_descent(x, s)) out.push_back(s);
    return out;
  }

  /// x <= y in Bruhat order.
  bool bruhat_leq(Elem x, Elem y) const { return below_[y].test(x); }
  bool bruhat_less(Elem x, Elem y) const { return x != y && bruhat_leq(x, y); }

  /// Linear action on weights.
  Weight act(Elem x, const Weight& mu) const {
    Weight r = mu;
    const auto& w = word(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect_gen(r, *it);
    return r;
  }
  Weight reflect_gen(const Weight& mu, int s) const {
    return rs_->reflect(mu, generators_[static_cast<std::size_t>(s)]);
  }

  std::optional<Elem> find(const Weight& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Reduced word as text, 1-based generator labels: "e", "s1", "s1s2".
  std::string word_string(Elem x) const {
    const auto& w = word(x);
    if (w.empty()) return "e";
    std::string s;
    for (int g : w) s += "s" + std::to_string(g + 1);
    return s;
  }

  /// Number of positive roots of the full system sent to negative roots.
  int inversion_count(Elem x) const {
    int n = 0;
    const auto& pos = rs_->positive_roots();
    for (const auto& r : pos) {
      auto c = rs_->to_root_coords(act(x, r.weight));
      if (!RootSystem::is_positive_expansion(c)) ++n;
    }
    return n;
  }

  friend WeylGroup generate(std::shared_ptr<const RootSystem> rs, std::size_t cap);
  friend WeylGroup generate(const IntegralSubsystem& sub, std::size_t cap);

 private:
  void build(std::size_t cap);

  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::size_t> generators_;
  std::vector<WeylElement> elements_;
  std::map<Weight, Elem> index_;
  std::vector<std::vector<Elem>> right_;
  std::vector<std::vector<Elem>> left_;
  std::vector<boost::dynamic_bitset<>> below_;
};

inline void WeylGroup::build(std::size_t cap) {
  const Weight base = rs_->rho();
  const int ngen = static_cast<int>(generators_.size());
  elements_.push_back({base, {}, 0});
  index_[base] = 0;
  std::size_t level_begin = 0;
  for (int len = 0;; ++len) {
    const std::size_t level_end = elements_.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (int s = 0; s < ngen; ++s) {
        // key(x s) = x(s base)
        auto word = elements_[p].reduced_word;
        word.push_back(s);
        Weight key = base;
        for (auto it = word.rbegin(); it != word.rend(); ++it) key = reflect_gen(key, *it);
        if (index_.count(key)) continue;
        if (elements_.size() >= cap)
          throw CapExceeded("Weyl group order exceeds cap " + std::to_string(cap));
        index_[key] = elements_.size();
        elements_.push_back({key, std::move(word), len + 1});
      }
    }
    if (elements_.size() == level_end) break;
    level_begin = level_end;
  }

  const std::size_t n = elements_.size();
  right_.assign(n, std::vector<Elem>(static_cast<std::size_t>(ngen)));
  left_.assign(n, std::vector<Elem>(static_cast<std::size_t>(ngen)));
  for (Elem x = 0; x < n; ++x) {
    for (int s = 0; s < ngen; ++s) {
      Weight r = act(x, reflect_gen(base, s));
      right_[x][static_cast<std::size_t>(s)] = index_.at(r);
      Weight l = reflect_gen(elements_[x].canonical_key, s);
      left_[x][static_cast<std::size_t>(s)] = index_.at(l);
    }
  }

  // [e, y] = [e, ys] u [e, ys]s for a right descent s of y.
  below_.assign(n, boost::dynamic_bitset<>(n));
  below_[0].set(0);
  for (Elem y = 1; y < n; ++y) {
    const int s = elements_[y].reduced_word.back();
    const Elem ys = right_mult(y, s);
    below_[y] = below_[ys];
    for (Elem z = below_[ys].find_first(); z != boost::dynamic_bitset<>::npos; z = below_[ys].find_next(z))
      below_[y].set(right_mult(z, s));
  }
}

/// The full Weyl group of rs.
inline WeylGroup generate(std::shared_ptr<const RootSystem> rs, std::size_t cap = WeylGroup::kDefaultCap) {
  WeylGroup g;
  for (std::size_t i = 0; i < rs->rank(); ++i) g.generators_.push_back(*rs->find_positive([&] {
    std::vector<int> e(rs->rank(), 0);
    e[i] = 1;
    return e;
  }()));
  g.rs_ = std::move(rs);
  g.build(cap);
  return g;
}

/// The integral Weyl group W_lambda, generated by reflections in Pi_lambda.
inline WeylGroup generate(const IntegralSubsystem& sub, std::size_t cap = WeylGroup::kDefaultCap) {
  WeylGroup g;
  g.rs_ = sub.rs;
  g.generators_ = sub.simple;
  g.build(cap);
  return g;
}

}  // namespace klsig
