#include "klsig/cli.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig tables, signed inversion and verification suites"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  klsig::JobConfig cfg;
  std::vector<std::string> painting;
  app.add_option("--type", cfg.type, "root system type: A1-A4, B2, B3, C3, D4, G2");
  app.add_option("--painting", painting, "noncompact simple roots, comma list of 1-based indices")->delimiter(',');
  app.add_option("--lambda", cfg.lambda, "weight: -rho, -2rho or comma-separated rationals")->capture_default_str();
  app.add_option("--depth", cfg.depth, "truncation depth for characters and Gram matrices")->capture_default_str();
  app.add_option("--suite", cfg.suites, "suite to run (repeatable); default all")
      ->check(CLI::IsMember(klsig::all_suites()));
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", cfg.out, "output file (verify, json dump) or directory (csv dump)");

  auto* verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
  auto* dump = app.add_subcommand("dump", "write KL and signed tables")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : klsig::kExitUsage;
  }

  try {
    for (const auto& tok : painting) {
      if (tok.find_first_not_of(" ") == std::string::npos) continue;
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (tok.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(tok);
      cfg.painting.push_back(v);
    }
  } catch (const std::exception&) {
    std::cerr << "error: --painting must be a comma list of integers\n";
    return klsig::kExitUsage;
  }

  try {
    if (verify->parsed()) return klsig::run(cfg);
    if (dump->parsed()) return klsig::dump(cfg);
  } catch (const klsig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return klsig::kExitUsage;
  }
  return klsig::kExitUsage;
}
