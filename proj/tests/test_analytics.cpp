#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gcore/analytics.hpp"

using namespace gcore;

TEST_CASE("the three standard accountings give 1, 0.25 and 0.5") {
  CHECK(efficiency(gcore_accounting(Family(3, 2))) == doctest::Approx(1.0));
  CHECK(efficiency(gcore_accounting(Family(2, 3))) == doctest::Approx(1.0));
  CHECK(efficiency(bb84_accounting()) == doctest::Approx(0.25));
  CHECK(efficiency(epr_accounting()) == doctest::Approx(0.5));
}

TEST_CASE("efficiency validates its inputs") {
  CHECK_THROWS_AS(efficiency({"zero", 0.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(efficiency({"free", 1.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(efficiency({"super", 3.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("capacity reproduces the per-family bit counts") {
  CHECK(capacity(Family(2, 2), 1).bits_total == doctest::Approx(2.0));
  CHECK(capacity(Family(3, 2), 1).bits_total == doctest::Approx(3.0));
  CHECK(capacity(Family(2, 3), 1).bits_total == doctest::Approx(std::log2(9.0)));
  CHECK(capacity(Family(3, 3), 1).bits_total == doctest::Approx(std::log2(27.0)));
  CHECK(capacity(Family(3, 2), 10).bits_total == doctest::Approx(30.0));
  CHECK(capacity(Family(3, 2), 1).bits_per_particle ==
        doctest::Approx(3.0 / 24.0));
  CHECK_THROWS_AS(capacity(Family(3, 2), 0), std::invalid_argument);
}

TEST_CASE("key guessing probability in log2 space") {
  CHECK(key_guess_log2_probability(2, 3) == doctest::Approx(-3.0));
  CHECK(key_guess_log2_probability(3, 2) == doctest::Approx(-2.0 * std::log2(3.0)));
  CHECK(key_guess_log2_probability(2, 64) == doctest::Approx(-64.0));
  CHECK_THROWS_AS(key_guess_log2_probability(1, 3), std::invalid_argument);
}

TEST_CASE("every reference figure verifies") {
  auto checks = verify_reference_figures();
  REQUIRE(checks.size() >= 15);
  for (const auto& c : checks) {
    INFO(c.name, ": expected ", c.expected, " got ", c.actual);
    CHECK(c.pass);
  }
}

TEST_CASE("session reports serialize to parseable canonical JSON") {
  Family fam(3, 2);
  SessionConfig cfg(fam, 5, ControlKey::from_string(2, "001"));
  cfg.seed = 42;
  SessionTranscript t = run_session(cfg);
  std::string a = session_report_json(cfg, t);
  std::string b = session_report_json(cfg, run_session(cfg));
  CHECK(a == b);  // byte-identical for identical seeds

  nlohmann::json j = nlohmann::json::parse(a);
  CHECK(j["family"]["basis_size"] == 8);
  CHECK(j["num_units"] == 5);
  CHECK(j["eavesdropping_detected"] == false);
  CHECK(j["efficiency"] == doctest::Approx(1.0));
  std::vector<int> digits = j["sifted_digits"].get<std::vector<int>>();
  CHECK(digits == t.sifted_digits);
}

TEST_CASE("attack reports serialize round trip") {
  Family fam(3, 2);
  AttackConfig a;
  AttackReport rep =
      intercept_resend_serial(fam, ControlKey::from_string(2, "001"), a, 50, 1);
  nlohmann::json j = nlohmann::json::parse(attack_report_json(fam, rep));
  CHECK(j["units"] == 50);
  CHECK(j["error_rate_uniform_convention"] == doctest::Approx(7.0 / 8.0));
  CHECK(j["eve_first_outcome_counts"].size() == 8);
}

TEST_CASE("verification ledger serializes with a global verdict") {
  auto checks = verify_reference_figures();
  nlohmann::json j = nlohmann::json::parse(paper_checks_json(checks));
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() == checks.size());
}

TEST_CASE("table dumps are printable for both printed families") {
  std::string qubit = tables_text(2, 3);
  CHECK(qubit.find("E_5: 8 7 6 5 4 3 2 1") != std::string::npos);
  std::string qutrit = tables_text(3, 2);
  CHECK(qutrit.find("E_3: 4 5 6 7 8 9 1 2 3") != std::string::npos);
}
