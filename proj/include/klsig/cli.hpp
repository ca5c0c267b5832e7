#pragma once

#include "klsig/export.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace klsig {

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s = {"classical-inversion", "signed-inversion", "conjugation",
                                             "coherent-step",       "characters",       "jantzen-oracle"};
  return s;
}

struct JobConfig {
  std::string type;
  std::vector<long> painting;  // 1-based
  std::string lambda = "-rho";
  int depth = 6;
  std::vector<std::string> suites;  // empty: all
  std::string format = "json";
  std::string out;  // empty: stdout
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kMaxCliDepth = 8;

/// Everything a run needs, resolved from a JobConfig.
struct Job {
  JobConfig config;
  std::shared_ptr<const RootSystem> rs;
  Painting painting{0, {}};
  Weight lambda{0};
  std::shared_ptr<const WeylGroup> group;
  bool integral = false;  // W_lambda = W
  std::vector<std::string> suites;
};

/// Validates a config; throws ConfigError on anything unusable.
inline Job resolve(const JobConfig& c) {
  Job job;
  job.config = c;
  if (c.type.empty()) throw ConfigError("--type is required");
  job.rs = build_root_system(c.type);
  job.painting = Painting::from_one_based(job.rs->rank(), c.painting);
  job.lambda = parse_weight(*job.rs, c.lambda);
  if (c.depth < 0 || c.depth > kMaxCliDepth)
    throw ConfigError("--depth must lie in [0, " + std::to_string(kMaxCliDepth) + "]");
  if (c.format != "json" && c.format != "csv") throw ConfigError("--format must be json or csv");
  std::set<std::string> known(all_suites().begin(), all_suites().end());
  for (const auto& s : c.suites)
    if (!known.count(s)) throw ConfigError("unknown suite '" + s + "'");
  job.suites = c.suites.empty() ? all_suites() : c.suites;

  auto sub = integral_subsystem(job.rs, job.lambda);
  for (auto k : sub.positive)
    if (job.rs->pairing(job.lambda, k) >= 0)
      throw ConfigError("lambda must be regular and antidominant for its integral roots");
  job.integral = sub.is_full();
  job.group = std::make_shared<const WeylGroup>(job.integral ? generate(job.rs) : generate(sub));
  return job;
}

struct SuiteResult {
  std::string name;
  bool pass = true;
  double seconds = 0;
  Json details = Json::object();
  Json counterexamples = Json::array();
};

namespace detail {

inline void require_signed(const Job& job) {
  if (!job.integral) throw ConfigError("signed suites need an integral lambda");
  try {
    require_signed_domain(*job.rs, job.lambda);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

inline Json entry_json(const WeylGroup& g, std::size_t r, std::size_t c, const BigInt& v, const BigInt& e) {
  return Json{{"row", g.word_string(r)}, {"col", g.word_string(c)}, {"value", to_json(v)}, {"expected", to_json(e)}};
}

inline SuiteResult suite_classical(const Job& job, KLTable& kl) {
  SuiteResult r{"classical-inversion"};
  auto rep = verify_inversion(multiplicity_matrix(kl), inversion_matrix(kl));
  r.pass = rep.ok;
  for (const auto& v : rep.violations) r.counterexamples.push_back(entry_json(*job.group, v.row, v.col, v.value, v.expected));
  return r;
}

inline SuiteResult suite_signed(const Job& job, KLTable& kl) {
  require_signed(job);
  SuiteResult r{"signed-inversion"};
  EpsilonGrading eps(job.rs, job.painting);
  auto m = signed_matrices(signed_table_twist(kl, eps, job.lambda));
  auto rep = verify_signed_inversion(m.S, m.T);
  r.pass = rep.ok;
  for (const auto& v : rep.violations) r.counterexamples.push_back(entry_json(*job.group, v.row, v.col, v.value, v.expected));
  r.details["w0_parity_mismatches"] = w0_parity_mismatches(*job.group, eps, job.lambda).size();
  return r;
}

inline SuiteResult suite_conjugation(const Job& job, KLTable& kl) {
  require_signed(job);
  SuiteResult r{"conjugation"};
  EpsilonGrading eps(job.rs, job.painting);
  auto m = signed_matrices(signed_table_twist(kl, eps, job.lambda));
  auto rep = conjugation_check(kl, m, eps, job.lambda);
  r.pass = rep.ok;
  r.details["diagonal"] = diagonal_json(*job.group, rep.diagonal);
  for (const auto& mm : rep.mismatches) {
    Json e = entry_json(*job.group, mm.x, mm.y, mm.value, mm.expected);
    e["matrix"] = std::string(1, mm.matrix);
    r.counterexamples.push_back(e);
  }
  return r;
}

inline SuiteResult suite_coherent(const Job& job, KLTable& kl) {
  SuiteResult r{"coherent-step"};
  const WeylGroup& g = *job.group;
  const auto b = inversion_matrix(kl);
  std::size_t steps = 0;
  auto check_row = [&](const char* kind, Elem x, int s, const std::vector<BigInt>& row, const IntMatrix& want) {
    ++steps;
    for (Elem w = 0; w < g.size(); ++w)
      if (row[w] != want(x, w)) {
        r.pass = false;
        Json e = entry_json(g, x, w, row[w], want(x, w));
        e["step"] = kind;
        e["s"] = s + 1;
        r.counterexamples.push_back(e);
      }
  };
  for (Elem x = 1; x < g.size(); ++x)
    for (int s : g.right_descents(x)) check_row("classical", x, s, coherent_invert_step(kl, x, s, b), b);
  bool signed_checked = false;
  if (job.painting.is_compact_form() && job.integral) {
    EpsilonGrading eps(job.rs, job.painting);
    auto tab = signed_table_twist(kl, eps, job.lambda);
    auto t = signed_inversion(tab);
    for (Elem x = 1; x < g.size(); ++x)
      for (int s : g.right_descents(x)) check_row("signed", x, s, signed_invert_step(tab, x, s, t), t);
    signed_checked = true;
  }
  r.details["steps"] = steps;
  r.details["signed_steps_checked"] = signed_checked;
  return r;
}

inline SuiteResult suite_characters(const Job& job, KLTable& kl) {
  SuiteResult r{"characters"};
  const WeylGroup& g = *job.group;
  const auto& rs = *job.rs;
  const auto a = multiplicity_matrix(kl);
  const auto b = inversion_matrix(kl);
  const int depth = job.config.depth;
  auto fail = [&](const std::string& what, Elem x) {
    r.pass = false;
    r.counterexamples.push_back(Json{{"check", what}, {"x", g.word_string(x)}});
  };
  for (Elem x = 0; x < g.size(); ++x) {
    auto ch = irreducible_character(g, b, x, job.lambda, depth);
    for (const auto& [w, c] : ch.coeffs)
      if (c < 0) fail("nonnegativity", x);
    const Weight xl = g.act(x, job.lambda);
    TruncatedCharacter sum{xl - rs.rho(), depth, {}};
    for (Elem y = 0; y < g.size(); ++y) {
      if (a(x, y) == 0) continue;
      const int shift = depth_below(rs, xl, g.act(y, job.lambda));
      if (shift > depth) continue;
      for (const auto& [w, c] : irreducible_character(g, b, y, job.lambda, depth - shift).coeffs)
        sum.add(w, a(x, y) * c);
    }
    if (!compare_on_common_window(rs, sum, verma_character(rs, xl, depth)).equal) fail("verma-round-trip", x);
  }
  if (job.integral) {
    const Elem w0 = g.long_element();
    const Weight hw = g.act(w0, job.lambda) - rs.rho();
    const int full = depth_below(rs, hw, g.act(w0, hw));
    const int d = std::min(full, depth);
    auto irr = irreducible_character(g, b, w0, job.lambda, d);
    if (!compare_on_common_window(rs, irr, freudenthal_character(rs, hw, d)).equal) fail("freudenthal", w0);
    r.details["finite_dimensional_full_support"] = d == full;
    r.details["weyl_dimension"] = to_json(weyl_dimension(rs, hw));
    if (d == full && irr.total() != weyl_dimension(rs, hw)) fail("weyl-dimension", w0);
  }
  return r;
}

inline SuiteResult suite_jantzen(const Job& job, KLTable& kl) {
  require_signed(job);
  if (job.config.depth > static_cast<int>(ChevalleyData::kMaxDepth))
    throw ConfigError("jantzen-oracle depth cap is " + std::to_string(ChevalleyData::kMaxDepth));
  SuiteResult r{"jantzen-oracle"};
  const WeylGroup& g = *job.group;
  ChevalleyData chev(job.rs);
  EpsilonGrading eps(job.rs, job.painting);
  std::vector<JantzenReport> reps;
  for (Elem x = 0; x < g.size(); ++x) reps.push_back(jantzen_report(chev, g, x, job.lambda, job.config.depth, &eps));
  auto m = signed_matrices(signed_table_twist(kl, eps, job.lambda));
  auto rep = verify_skl_predictions(reps, kl, m.S, m.T, job.lambda);
  r.pass = rep.ok;
  std::size_t flips = 0;
  for (const auto& c : rep.checks) {
    flips += c.signature_sign_flipped + c.inversion_sign_flipped;
    if (c.notes.empty()) continue;
    r.counterexamples.push_back(Json{{"x", g.word_string(c.x)},
                                     {"multiplicity", c.multiplicity_ok},
                                     {"signature", c.signature_ok},
                                     {"inversion", c.inversion_ok},
                                     {"notes", c.notes}});
  }
  r.details["global_sign_flips"] = flips;
  // S from the recursion with T from the twist formula, for comparison
  auto rc = signed_matrices(signed_kl_recursive(job.group, eps, job.lambda));
  r.details["recursion_S_twist_T_ok"] = verify_skl_predictions(reps, kl, rc.S, m.T, job.lambda).ok;
  return r;
}

inline void write_output(const JobConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

}  // namespace detail

/// Runs the requested suites and writes the report. Returns the exit status.
inline int run(const JobConfig& config, std::ostream& log = std::cerr) {
  Job job;
  try {
    job = resolve(config);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  KLTable kl(job.group);
  std::vector<SuiteResult> results;
  using Fn = SuiteResult (*)(const Job&, KLTable&);
  const std::map<std::string, Fn> table = {{"classical-inversion", detail::suite_classical},
                                           {"signed-inversion", detail::suite_signed},
                                           {"conjugation", detail::suite_conjugation},
                                           {"coherent-step", detail::suite_coherent},
                                           {"characters", detail::suite_characters},
                                           {"jantzen-oracle", detail::suite_jantzen}};
  try {
    for (const auto& name : job.suites) {
      auto t0 = std::chrono::steady_clock::now();
      SuiteResult r = table.at(name)(job, kl);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      log << name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
      results.push_back(std::move(r));
    }
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  const Json header = export_header(*job.group, job.painting, job.lambda);
  std::string text;
  if (config.format == "json") {
    Json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["header"] = header;
    rep["depth"] = config.depth;
    rep["pass"] = pass;
    Json suites = Json::array();
    for (const auto& r : results)
      suites.push_back(Json{{"name", r.name},
                            {"pass", r.pass},
                            {"seconds", r.seconds},
                            {"details", r.details},
                            {"counterexamples", r.counterexamples}});
    rep["suites"] = suites;
    text = rep.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& [k, v] : header.items())
      if (k != "elements") os << "# " << k << "=" << v.dump() << "\n";
    os << "suite,pass,seconds,counterexamples\n";
    for (const auto& r : results)
      os << r.name << "," << (r.pass ? "true" : "false") << "," << r.seconds << "," << r.counterexamples.size() << "\n";
    text = os.str();
  }
  try {
    detail::write_output(config, text);
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return pass ? kExitOk : kExitFailed;
}

/// Writes the classical and signed tables and the A, B, S, T, D matrices.
/// JSON goes to one file (or stdout); CSV needs --out naming a directory.
inline int dump(const JobConfig& config, std::ostream& log = std::cerr) {
  Job job;
  try {
    job = resolve(config);
    if (config.format == "csv" && config.out.empty()) throw ConfigError("csv dumps need --out DIR");
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const WeylGroup& g = *job.group;
  KLTable kl(job.group);
  kl.fill();
  const auto a = multiplicity_matrix(kl);
  const auto b = inversion_matrix(kl);
  const Json header = export_header(g, job.painting, job.lambda);

  std::optional<SignedKLTable> tab;
  std::string signed_reason;
  try {
    detail::require_signed(job);
    tab = signed_table_twist(kl, EpsilonGrading(job.rs, job.painting), job.lambda);
  } catch (const ConfigError& e) {
    signed_reason = e.what();
  }
  auto classical = [&](Elem x, Elem y) -> const IntPolynomial& { return kl.at(x, y); };

  try {
    if (config.format == "json") {
      Json out;
      out["schema_version"] = kSchemaVersion;
      out["header"] = header;
      out["kl_table"] = polynomial_table_json(g, classical);
      out["A"] = matrix_json(g, a);
      out["B"] = matrix_json(g, b);
      if (tab) {
        auto m = signed_matrices(*tab);
        EpsilonGrading eps(job.rs, job.painting);
        out["signed_table"] = polynomial_table_json(g, [&](Elem x, Elem y) -> const IntPolynomial& { return (*tab)(x, y); });
        out["S"] = matrix_json(g, m.S);
        out["T"] = matrix_json(g, m.T);
        out["D"] = diagonal_json(g, conjugation_diagonal(g, eps, job.lambda));
      } else {
        out["signed_table"] = nullptr;
        out["signed_unavailable"] = signed_reason;
      }
      detail::write_output(config, out.dump(2) + "\n");
    } else {
      namespace fs = std::filesystem;
      fs::create_directories(config.out);
      auto put = [&](const std::string& name, const std::string& text) {
        std::ofstream f(fs::path(config.out) / name, std::ios::binary);
        if (!f) throw Error("cannot write " + (fs::path(config.out) / name).string());
        f << text;
      };
      put("kl.csv", polynomial_table_csv(g, classical, header));
      put("A.csv", matrix_csv(g, a, header));
      put("B.csv", matrix_csv(g, b, header));
      if (tab) {
        auto m = signed_matrices(*tab);
        EpsilonGrading eps(job.rs, job.painting);
        auto d = conjugation_diagonal(g, eps, job.lambda);
        IntMatrix dm(g.size(), g.size());
        for (Elem x = 0; x < g.size(); ++x) dm(x, x) = d[x];
        put("signed.csv", polynomial_table_csv(g, [&](Elem x, Elem y) -> const IntPolynomial& { return (*tab)(x, y); }, header));
        put("S.csv", matrix_csv(g, m.S, header));
        put("T.csv", matrix_csv(g, m.T, header));
        put("D.csv", matrix_csv(g, dm, header));
      } else {
        log << "note: signed tables skipped: " << signed_reason << "\n";
      }
    }
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace klsig
