// Suite runner for the quantum 3-sphere verification workbench.
//
// Exit status: 0 when every check passes, 1 when any check fails,
// 2 on usage errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qs3/report.hpp"
#include "qs3/suites.hpp"

namespace {

std::vector<double> parse_grid(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": cannot parse '" + tok + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty grid");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qs3verify - verification suites for the Heegaard quantum 3-sphere algebras"};

  std::string suite = "all";
  std::string p_text, q_text, theta_text, cutoff_text, out_path, preset;
  std::string format = "json";
  int K = 0;
  double tol = -1.0;
  std::uint64_t seed = 12345;

  app.add_option("--suite", suite,
                 "relations|basis|identities|iso|fiber|lemma-gen|ktheory|all")
      ->capture_default_str();
  app.add_option("--p", p_text, "comma-separated p grid (default 0,0.3,0.7)");
  app.add_option("--q", q_text, "comma-separated q grid (default 0,0.3,0.7)");
  app.add_option("--theta", theta_text, "comma-separated theta grid (default 0,0.5,0.7071)");
  app.add_option("--cutoff", cutoff_text, "truncation N or N,M (default 24,24)");
  app.add_option("--K", K, "series truncation length (0 = derive from p, q)")
      ->capture_default_str();
  app.add_option("--tol", tol, "override the suite's main tolerance");
  app.add_option("--seed", seed, "seed for randomized property checks")->capture_default_str();
  app.add_option("--preset", preset,
                 "six-term preset name (s3-quantum, s3-classical) or JSON config path");
  app.add_option("--out", out_path, "write the report to this path instead of stdout");
  app.add_option("--format", format, "json|text")->capture_default_str();

  try {
    app.parse(argc, argv);

    qs3::SuiteConfig config;
    config.suite = qs3::suite_from_string(suite);
    if (!p_text.empty()) config.p_grid = parse_grid(p_text, "--p");
    if (!q_text.empty()) config.q_grid = parse_grid(q_text, "--q");
    if (!theta_text.empty()) config.theta_grid = parse_grid(theta_text, "--theta");
    if (!cutoff_text.empty()) {
      std::vector<double> c = parse_grid(cutoff_text, "--cutoff");
      config.cutoff.n = static_cast<int>(c[0]);
      config.cutoff.m = c.size() > 1 ? static_cast<int>(c[1]) : static_cast<int>(c[0]);
    }
    config.K = K;
    config.tol = tol;
    config.seed = seed;
    config.preset = preset;
    for (double v : config.p_grid)
      if (!(v >= 0.0 && v < 1.0)) throw CLI::ValidationError("--p values must lie in [0,1)");
    for (double v : config.q_grid)
      if (!(v >= 0.0 && v < 1.0)) throw CLI::ValidationError("--q values must lie in [0,1)");
    for (double v : config.theta_grid)
      if (!(v >= 0.0 && v < 1.0)) throw CLI::ValidationError("--theta values must lie in [0,1)");
    if (tol > 0.0 && !(tol > 0.0)) throw CLI::ValidationError("--tol must be positive");
    if (format != "json" && format != "text")
      throw CLI::ValidationError("--format must be json or text");

    qs3::VerificationReport report = qs3::run(config);
    std::string rendered =
        format == "json" ? qs3::report_to_json(report) : qs3::report_to_text(report);
    if (out_path.empty()) {
      std::cout << rendered << "\n";
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      out << rendered << "\n";
    }
    return report.all_pass() ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message; 0 for --help
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
