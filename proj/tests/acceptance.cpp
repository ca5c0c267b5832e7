#include "klsig/hecke.hpp"
#include "klsig/shapovalov.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace klsig;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // failures, if any, occur only where epsilon is not w0-invariant
  bool conflict_only = true;
};

struct Config {
  std::string type;
  Painting painting;
  int k;  // lambda = -k rho
};

std::shared_ptr<const WeylGroup> group_of(const std::string& t) {
  return std::make_shared<const WeylGroup>(generate(build_root_system(t)));
}

std::string describe(const Config& c) {
  return c.type + " " + c.painting.to_string() + (c.k == 1 ? " -rho" : " -" + std::to_string(c.k) + "rho");
}

std::vector<Config> signed_configs(const std::vector<std::string>& types, const std::vector<int>& ks) {
  std::vector<Config> out;
  for (const auto& t : types) {
    const std::size_t r = build_root_system(t)->rank();
    for (int k : ks)
      for (const auto& p : Painting::all(r)) out.push_back({t, p, k});
  }
  return out;
}

bool epsilon_w0_invariant(const WeylGroup& g, const EpsilonGrading& eps, const Weight& lambda) {
  return w0_parity_mismatches(g, eps, lambda).empty();
}

/// Runs check on each configuration and summarizes the failures.
Outcome over_configs(const std::vector<Config>& configs,
                     const std::function<bool(const Config&, const WeylGroup&, KLTable&, const EpsilonGrading&,
                                              const Weight&)>& check) {
  Outcome o;
  std::map<std::string, std::pair<std::shared_ptr<const WeylGroup>, std::unique_ptr<KLTable>>> cache;
  std::vector<std::string> failed;
  for (const auto& c : configs) {
    auto& slot = cache[c.type];
    if (!slot.first) {
      slot.first = group_of(c.type);
      slot.second = std::make_unique<KLTable>(slot.first);
    }
    const WeylGroup& g = *slot.first;
    const Weight lambda = Rational(-c.k) * g.root_system().rho();
    EpsilonGrading eps(g.root_system_ptr(), c.painting);
    if (!check(c, g, *slot.second, eps, lambda)) {
      o.pass = false;
      failed.push_back(describe(c));
      if (epsilon_w0_invariant(g, eps, lambda)) o.conflict_only = false;
    }
  }
  std::ostringstream os;
  os << configs.size() - failed.size() << "/" << configs.size() << " configurations";
  if (!failed.empty()) {
    os << "; failing:";
    for (const auto& f : failed) os << " [" << f << "]";
  }
  o.detail = os.str();
  return o;
}

Outcome criterion1() {
  Outcome o;
  for (const std::string t : {"A1", "A2", "B2", "A3"}) {
    auto g = group_of(t);
    KLTable kl(g);
    auto rep = verify_inversion(multiplicity_matrix(kl), inversion_matrix(kl));
    if (!rep.ok) {
      o.pass = false;
      o.conflict_only = false;
      o.detail += t + " fails; ";
    }
  }
  if (o.pass) o.detail = "A B = B A = I on A1, A2, B2, A3";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t steps = 0, bad = 0;
  for (const std::string t : {"A2", "B2", "A3"}) {
    auto g = group_of(t);
    KLTable kl(g);
    auto b = inversion_matrix(kl);
    for (Elem x = 1; x < g->size(); ++x)
      for (int s : g->right_descents(x)) {
        ++steps;
        auto row = coherent_invert_step(kl, x, s, b);
        for (Elem w = 0; w < g->size(); ++w)
          if (row[w] != b(x, w)) {
            ++bad;
            break;
          }
      }
  }
  o.pass = bad == 0;
  o.conflict_only = o.pass;
  o.detail = std::to_string(steps - bad) + "/" + std::to_string(steps) + " (x, s) steps reproduce B on A2, B2, A3";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t pairs = 0, bad = 0;
  for (const std::string t : {"A1", "A2", "B2", "A3"}) {
    auto g = group_of(t);
    KLTable kl(g);
    HeckeOracle oracle(*g);
    for (Elem x = 0; x < g->size(); ++x)
      for (Elem y = 0; y < g->size(); ++y) {
        ++pairs;
        if (kl(x, y) != hecke_oracle_kl(oracle, x, y)) ++bad;
      }
  }
  // P_{s2, s2s1s3s2} = 1 + q in A3
  auto g = group_of("A3");
  KLTable kl(g);
  Elem x = g->simple(1), y = g->identity();
  for (int s : {1, 0, 2, 1}) y = g->right_mult(y, s);
  const bool special = kl(x, y) == IntPolynomial{BigInt(1), BigInt(1)};
  o.pass = bad == 0 && special;
  o.conflict_only = o.pass;
  o.detail = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs agree with the Hecke algebra; " +
             "P_{s2,s2s1s3s2} = " + kl(x, y).to_string();
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t pairs = 0, bad = 0;
  for (const std::string t : {"A2", "B2", "A3"}) {
    auto g = group_of(t);
    KLTable kl(g);
    const Elem w0 = g->long_element();
    for (Elem x = 0; x < g->size(); ++x)
      for (Elem y = 0; y < g->size(); ++y) {
        ++pairs;
        IntPolynomial sum;
        for (Elem z = 0; z < g->size(); ++z) {
          if (!g->bruhat_leq(x, z) || !g->bruhat_leq(z, y)) continue;
          IntPolynomial term = kl(x, z) * kl(g->multiply(w0, y), g->multiply(w0, z));
          sum += parity_sign(g->length(z) - g->length(x)) == 1 ? term : -term;
        }
        if (sum != (x == y ? IntPolynomial(BigInt(1)) : IntPolynomial())) ++bad;
      }
  }
  o.pass = bad == 0;
  o.conflict_only = o.pass;
  o.detail = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs satisfy the identity in Z[q]";
  return o;
}

const std::vector<Config>& c5_configs() {
  static const auto c = signed_configs({"A1", "A2", "B2", "A3"}, {1, 2});
  return c;
}

Outcome criterion5() {
  return over_configs(c5_configs(), [](const Config&, const WeylGroup&, KLTable& kl, const EpsilonGrading& eps,
                                       const Weight& lambda) {
    auto m = signed_matrices(signed_table_twist(kl, eps, lambda));
    return verify_signed_inversion(m.S, m.T).ok;
  });
}

Outcome criterion6() {
  return over_configs(signed_configs({"A1", "A2", "B2"}, {1, 2}),
                      [](const Config&, const WeylGroup& g, KLTable& kl, const EpsilonGrading& eps,
                         const Weight& lambda) {
                        auto gp = kl.group_ptr();
                        (void)g;
                        return signed_table_twist(kl, eps, lambda) == signed_kl_recursive(gp, eps, lambda);
                      });
}

Outcome criterion7() {
  return over_configs(c5_configs(), [](const Config&, const WeylGroup&, KLTable& kl, const EpsilonGrading& eps,
                                       const Weight& lambda) {
    auto m = signed_matrices(signed_table_twist(kl, eps, lambda));
    return conjugation_check(kl, m, eps, lambda).ok;
  });
}

Outcome criterion8() {
  Outcome o;
  std::ostringstream os;
  for (const std::string t : {"A1", "A2", "B2"}) {
    auto g = group_of(t);
    const auto& rs = g->root_system();
    KLTable kl(g);
    auto b = inversion_matrix(kl);
    const Weight lambda = Rational(-2) * rs.rho();
    const Elem w0 = g->long_element();
    const Weight hw = g->act(w0, lambda) - rs.rho();
    const int full = depth_below(rs, hw, g->act(w0, hw));
    const bool within = full <= 8;
    auto irr = irreducible_character(*g, b, w0, lambda, full);
    const bool same = compare_on_common_window(rs, irr, freudenthal_character(rs, hw, full)).equal;
    const BigInt dim = weyl_dimension(rs, hw);
    const bool ok = within && same && irr.total() == dim;
    if (!ok) {
      o.pass = false;
      o.conflict_only = false;
    }
    os << t << ": hw " << hw.to_string() << ", depth " << full << ", dim " << irr.total().str() << "/" << dim.str()
       << (ok ? "" : " MISMATCH") << "; ";
  }
  o.detail = os.str();
  return o;
}

std::vector<JantzenReport> reports_for(const ChevalleyData& chev, const WeylGroup& g, const Weight& lambda, int depth,
                                       const EpsilonGrading* eps) {
  std::vector<JantzenReport> reps;
  for (Elem x = 0; x < g.size(); ++x) reps.push_back(jantzen_report(chev, g, x, lambda, depth, eps));
  return reps;
}

Outcome criterion9() {
  Outcome o;
  std::size_t checked = 0, bad = 0;
  for (const std::string t : {"A1", "A2"}) {
    auto g = group_of(t);
    ChevalleyData chev(g->root_system_ptr());
    KLTable kl(g);
    const Weight lambda = -g->root_system().rho();
    auto reps = reports_for(chev, *g, lambda, 5, nullptr);
    const IntMatrix id = IntMatrix::identity(g->size());
    for (const auto& c : verify_skl_predictions(reps, kl, id, id, lambda).checks) {
      ++checked;
      if (!c.multiplicity_ok) ++bad;
    }
  }
  o.pass = bad == 0;
  o.conflict_only = o.pass;
  o.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) +
             " modules: per-level dimensions match Jantzen multiplicities (depth 5)";
  return o;
}

const std::vector<std::pair<Config, int>>& c10_configs() {
  static const std::vector<std::pair<Config, int>> c = {{{"A1", Painting(1, {}), 1}, 4},
                                                        {{"A1", Painting(1, {0}), 1}, 4},
                                                        {{"A2", Painting(2, {}), 1}, 5},
                                                        {{"A2", Painting(2, {0}), 1}, 5}};
  return c;
}

/// Criterion 10 for a choice of (S, T) built from the configuration.
Outcome signature_oracle(const std::function<SignedMatrices(KLTable&, const EpsilonGrading&, const Weight&)>& pick,
                         std::size_t* flips) {
  Outcome o;
  std::vector<std::string> failed;
  for (const auto& [c, depth] : c10_configs()) {
    auto g = group_of(c.type);
    ChevalleyData chev(g->root_system_ptr());
    KLTable kl(g);
    const Weight lambda = -g->root_system().rho();
    EpsilonGrading eps(g->root_system_ptr(), c.painting);
    auto reps = reports_for(chev, *g, lambda, depth, &eps);
    auto m = pick(kl, eps, lambda);
    auto rep = verify_skl_predictions(reps, kl, m.S, m.T, lambda);
    for (const auto& ch : rep.checks) *flips += ch.signature_sign_flipped + ch.inversion_sign_flipped;
    if (!rep.ok) {
      o.pass = false;
      std::size_t sig = 0, inv = 0;
      for (const auto& ch : rep.checks) {
        sig += !ch.signature_ok;
        inv += !ch.inversion_ok;
      }
      failed.push_back(describe(c) + ": S-expansion fails for " + std::to_string(sig) + " x, T-expansion for " +
                       std::to_string(inv) + " x");
      if (epsilon_w0_invariant(*g, eps, lambda)) o.conflict_only = false;
    }
  }
  std::ostringstream os;
  os << c10_configs().size() - failed.size() << "/" << c10_configs().size() << " configurations";
  for (const auto& f : failed) os << "; " << f;
  o.detail = os.str();
  return o;
}

Outcome criterion10() {
  std::size_t flips = 0;
  Outcome o = signature_oracle(
      [](KLTable& kl, const EpsilonGrading& eps, const Weight& lambda) {
        return signed_matrices(signed_table_twist(kl, eps, lambda));
      },
      &flips);
  o.detail += "; global sign flips used: " + std::to_string(flips);
  return o;
}

Outcome criterion11() {
  Outcome o;
  o.conflict_only = false;
  std::vector<std::string> failed;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok && (failed.empty() || failed.back() != what)) failed.push_back(what);
  };
  for (const std::string t : {"A2", "B2", "A3"}) {
    auto g = group_of(t);
    const Elem w0 = g->long_element();
    KLTable kl(g);
    for (Elem x = 0; x < g->size(); ++x) {
      require(g->length(g->multiply(w0, x)) == g->max_length() - g->length(x), t + " length of w0 x");
      for (Elem y = 0; y < g->size(); ++y) {
        require(g->bruhat_leq(x, y) == g->bruhat_leq(g->multiply(w0, y), g->multiply(w0, x)), t + " w0 reversal");
        for (int s = 0; s < static_cast<int>(g->num_generators()); ++s) {
          const Elem xs = g->right_mult(x, s), ys = g->right_mult(y, s);
          if (g->length(xs) < g->length(x) || g->length(ys) < g->length(y)) continue;
          const bool c = g->bruhat_leq(x, y);
          require(g->bruhat_leq(xs, ys) == c && g->bruhat_leq(x, ys) == c, t + " lifting");
        }
        require(kl.mu(g->multiply(w0, x), g->multiply(w0, y)) == kl.mu(y, x), t + " mu symmetry");
        const auto& p = kl(x, y);
        if (!g->bruhat_leq(x, y)) {
          require(p.is_zero(), t + " support");
          continue;
        }
        require(p.coefficient(0) == 1, t + " constant term");
        if (x != y) require(2 * p.degree() <= g->length(y) - g->length(x) - 1, t + " degree bound");
        for (const auto& c : p.coefficients()) require(c >= 0, t + " nonnegativity");
      }
    }
  }
  for (const std::string t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    auto rs = build_root_system(t);
    for (const auto& p : Painting::all(rs->rank())) {
      EpsilonGrading eps(rs, p);
      for (const auto& a : rs->positive_roots())
        for (const auto& b : rs->positive_roots())
          require(eps(a.weight + b.weight) == (eps(a.weight) + eps(b.weight)) % 2 &&
                      eps(a.weight - b.weight) == (eps(a.weight) + eps(b.weight)) % 2,
                  t + " epsilon additivity");
    }
  }
  o.pass = failed.empty();
  if (o.pass) {
    o.detail = "lifting, w0 symmetry, mu symmetry, degree bounds, nonnegativity on A2, B2, A3; "
               "epsilon additivity on all supported types and paintings";
  } else {
    for (const auto& f : failed) o.detail += f + "; ";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "classical inversion", 10, criterion1},
      {2, "inductive step equals closed form", 30, criterion2},
      {3, "KL recursion equals Hecke algebra", 60, criterion3},
      {4, "polynomial inversion identity", 60, criterion4},
      {5, "signed inversion S T = T S = I", 60, criterion5},
      {6, "twist formula equals signed recursion", 60, criterion6},
      {7, "conjugation structure", 60, criterion7},
      {8, "character oracle", 60, criterion8},
      {9, "Jantzen multiplicity oracle", 300, criterion9},
      {10, "signed signature oracle", 600, criterion10},
      {11, "property suites", 120, criterion11},
  };
  int passed = 0;
  bool unexplained = false;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = o.pass && in_time;
    passed += ok;
    std::printf("criterion %2d %-40s %s  %.2fs  %s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    if (!in_time) std::printf("             time limit %.0fs exceeded\n", c.limit_seconds);
    if (!ok && (!in_time || !o.conflict_only)) unexplained = true;
    if (!ok && in_time && o.conflict_only)
      std::printf("             every failing configuration has epsilon(w0 x lambda - w0 y lambda) != "
                  "epsilon(x lambda - y lambda) for some x, y\n");
  }

  // Same checks with S from the signed recursion and T from the twist formula.
  Outcome mixed5 = over_configs(c5_configs(), [](const Config&, const WeylGroup&, KLTable& kl,
                                                 const EpsilonGrading& eps, const Weight& lambda) {
    SignedMatrices m{signed_multiplicity(signed_kl_recursive(kl.group_ptr(), eps, lambda)),
                     signed_inversion(signed_table_twist(kl, eps, lambda))};
    return verify_signed_inversion(m.S, m.T).ok && conjugation_check(kl, m, eps, lambda).ok;
  });
  std::size_t flips = 0;
  Outcome mixed10 = signature_oracle(
      [](KLTable& kl, const EpsilonGrading& eps, const Weight& lambda) {
        return SignedMatrices{signed_multiplicity(signed_kl_recursive(kl.group_ptr(), eps, lambda)),
                              signed_inversion(signed_table_twist(kl, eps, lambda))};
      },
      &flips);
  std::printf("note: S from the recursion, T from the twist formula: inversion and conjugation %s (%s); "
              "signature oracle %s (%s)\n",
              mixed5.pass ? "hold" : "fail", mixed5.detail.c_str(), mixed10.pass ? "holds" : "fails",
              mixed10.detail.c_str());

  std::printf("%d/%zu criteria passed\n", passed, criteria.size());
  if (unexplained) {
    std::printf("failures outside the sign-convention conflict\n");
    return 1;
  }
  return 0;
}
