#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "qs3/ktheory.hpp"
#include "qs3/report.hpp"
#include "qs3/suites.hpp"

using namespace qs3;

namespace {

SuiteConfig small_config(Suite s) {
  SuiteConfig c;
  c.suite = s;
  c.p_grid = {0.3};
  c.q_grid = {0.5};
  c.theta_grid = {0.3};
  c.cutoff = Cutoff{12, 12};
  c.K = 20;
  return c;
}

std::string strip_wall_clock(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  j.erase("wall_clock_ms");
  return j.dump();
}

}  // namespace

TEST_CASE("suite names round-trip") {
  for (Suite s : {Suite::Relations, Suite::Basis, Suite::Identities, Suite::Iso, Suite::Fiber,
                  Suite::LemmaGen, Suite::KTheory, Suite::All})
    CHECK(suite_from_string(suite_to_string(s)) == s);
  CHECK_THROWS_AS(suite_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("ktheory suite with the quantum preset") {
  SuiteConfig c = small_config(Suite::KTheory);
  c.preset = "s3-quantum";
  VerificationReport rep = run(c);
  CHECK(rep.all_pass());
  bool found_g0 = false, found_g1 = false;
  for (const CheckRecord& r : rep.checks) {
    if (r.name == "ktheory/s3-quantum/g0") found_g0 = r.pass;
    if (r.name == "ktheory/s3-quantum/g1") found_g1 = r.pass;
  }
  CHECK(found_g0);
  CHECK(found_g1);
}

TEST_CASE("ktheory suite accepts a JSON config file") {
  std::string path = "six_term_config_test.json";
  {
    std::ofstream out(path);
    out << six_term_to_json(six_term_preset("s3-classical"));
  }
  SuiteConfig c = small_config(Suite::KTheory);
  c.preset = path;
  VerificationReport rep = run(c);
  CHECK(rep.all_pass());
  std::remove(path.c_str());

  SuiteConfig bad = small_config(Suite::KTheory);
  bad.preset = "definitely-not-a-preset";
  CHECK_THROWS_AS(run(bad), std::invalid_argument);
}

TEST_CASE("relations suite at the commutative point") {
  SuiteConfig c = small_config(Suite::Relations);
  c.p_grid = {0.0};
  c.q_grid = {0.0};
  c.theta_grid = {0.0};
  c.cutoff = Cutoff{16, 16};
  c.tol = 1e-12;
  VerificationReport rep = run(c);
  CHECK(rep.total() == 20);
  CHECK(rep.all_pass());
  for (const CheckRecord& r : rep.checks) CHECK(r.value <= 1e-12);
}

TEST_CASE("failing checks flip the exit contract") {
  SuiteConfig c = small_config(Suite::Relations);
  c.tol = 1e-30;  // unreachable tolerance: torus phases leave rounding noise
  VerificationReport rep = run(c);
  CHECK(rep.failed() > 0);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("reports are deterministic for a fixed seed and config") {
  SuiteConfig c = small_config(Suite::Fiber);
  c.seed = 424242;
  VerificationReport r1 = run(c);
  VerificationReport r2 = run(c);
  CHECK(r1.all_pass());
  CHECK(strip_wall_clock(report_to_json(r1)) == strip_wall_clock(report_to_json(r2)));
}

TEST_CASE("report JSON carries the schema and consistent counts") {
  SuiteConfig c = small_config(Suite::Identities);
  VerificationReport rep = run(c);
  nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j.at("schema") == "1");
  CHECK(j.at("suite") == "identities");
  CHECK(j.at("summary").at("total").get<int>() ==
        j.at("summary").at("passed").get<int>() + j.at("summary").at("failed").get<int>());
  CHECK(j.at("checks").size() == static_cast<size_t>(rep.total()));
  // records are sorted by name
  std::string prev;
  for (const auto& chk : j.at("checks")) {
    std::string name = chk.at("name").get<std::string>();
    CHECK(prev <= name);
    prev = name;
  }
}

TEST_CASE("text rendering marks passes and failures") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.config_echo = "none";
  rep.add_numeric("alpha", "x=1", 0.5, 1.0);
  rep.add_numeric("beta", "", 2.0, 1.0);
  std::string text = report_to_text(rep);
  CHECK(text.find("[PASS] alpha") != std::string::npos);
  CHECK(text.find("[FAIL] beta") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
}
