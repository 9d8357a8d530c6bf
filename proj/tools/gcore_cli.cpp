// gcore: command-line front end for GCORE protocol simulations.
//
// Exit codes: 0 clean run / all checks pass, 2 eavesdropping detected
// (run) or a verification failure (verify-paper), 1 usage or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcore/analytics.hpp"

namespace {

int write_out(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 1;
  }
  f << content;
  return f.good() ? 0 : 1;
}

// --config file values become flag defaults; explicit flags win.
void apply_config_defaults(CLI::App& cmd, const std::string& config_path) {
  if (config_path.empty()) return;
  std::ifstream f(config_path);
  if (!f) throw CLI::ValidationError("--config", "cannot read " + config_path);
  nlohmann::json j = nlohmann::json::parse(f);
  for (auto& [key, value] : j.items()) {
    CLI::Option* opt = cmd.get_option_no_throw("--" + key);
    if (!opt) continue;
    if (opt->count() > 0) continue;  // explicit flag overrides config
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    opt->add_result(text);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "GCORE order-rearrangement QKD simulator.\n"
      "Exit codes: 0 clean, 2 eavesdropping detected / check failure, "
      "1 usage error."};
  app.require_subcommand(1);

  int particles = 3, dim = 2, units = 100, grid = 201, threads = 0, guess = 0;
  int group = 1;
  double check_fraction = 0.25, v = 1.0, x = 0.0;
  std::uint64_t seed = 0;
  std::string key = "0", out = "-", config, kind = "intercept-resend";
  std::string guess_strategy = "uniform", format = "json";

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--particles", particles, "particles per state (N >= 2)");
    cmd->add_option("--dim", dim, "levels per particle (d >= 2)");
  };

  CLI::App* run = app.add_subcommand("run", "simulate a full session");
  add_family(run);
  run->add_option("--units", units, "carrier units to transmit");
  run->add_option("--key", key, "control key as a base-d digit string");
  run->add_option("--group-size", group, "units governed by one key block");
  run->add_option("--check-fraction", check_fraction, "fraction of labels checked");
  run->add_option("--seed", seed, "RNG seed");
  run->add_option("--adversary", kind,
                  "none | intercept-resend (Eve with a random key guess)");
  run->add_option("--out", out, "report path, - for stdout");
  run->add_option("--config", config, "JSON file of flag defaults");

  CLI::App* attack = app.add_subcommand("attack", "Monte-Carlo attack study");
  add_family(attack);
  attack->add_option("--units", units, "independent units to simulate");
  attack->add_option("--key", key, "control key as a base-d digit string");
  attack->add_option("--seed", seed, "RNG seed");
  attack->add_option("--threads", threads, "worker threads, 0 = library default");
  attack->add_option("--kind", kind, "intercept-resend | cloner");
  attack->add_option("--guess-strategy", guess_strategy, "uniform | fixed");
  attack->add_option("--guess", guess, "fixed permutation guess index");
  attack->add_option("--v", v, "cloner amplitude v (cloner kind)");
  attack->add_option("--x", x, "cloner amplitude x (cloner kind)");
  attack->add_option("--out", out, "report path, - for stdout");
  attack->add_option("--config", config, "JSON file of flag defaults");

  CLI::App* curve = app.add_subcommand("cloner-curve",
                                       "fidelity/information curve CSV");
  curve->add_option("--grid-points", grid, "rows on the uniform grid (>= 2)");
  curve->add_option("--out", out, "CSV path, - for stdout");
  curve->add_option("--config", config, "JSON file of flag defaults");

  CLI::App* verify = app.add_subcommand("verify-paper",
                                        "recheck every closed-form figure");
  verify->add_option("--format", format, "text | json");
  verify->add_option("--out", out, "report path, - for stdout");

  CLI::App* tables = app.add_subcommand("tables", "dump rearrangement tables");
  add_family(tables);
  tables->add_option("--out", out, "path, - for stdout");

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().at(0);
    apply_config_defaults(*sub, config);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (run->parsed()) {
      gcore::Family fam(particles, dim);
      gcore::SessionConfig cfg(
          fam, units, gcore::ControlKey::from_string(dim, key, group));
      cfg.check_fraction = check_fraction;
      cfg.seed = seed;
      if (kind == "intercept-resend") {
        gcore::AttackConfig a;
        a.kind = gcore::AttackConfig::Kind::InterceptResend;
        cfg.adversary = a;
      } else if (kind != "none" && kind != "intercept-resend") {
        std::cerr << "--adversary must be none or intercept-resend\n";
        return 1;
      }
      gcore::SessionTranscript t = gcore::run_session(cfg);
      if (int rc = write_out(out, gcore::session_report_json(cfg, t))) return rc;
      return t.eavesdropping_detected ? 2 : 0;
    }

    if (attack->parsed()) {
      gcore::Family fam(particles, dim);
      gcore::AttackReport rep;
      if (kind == "cloner") {
        rep = gcore::cloner_attack(v, x);
      } else if (kind == "intercept-resend") {
        gcore::AttackConfig a;
        a.kind = gcore::AttackConfig::Kind::InterceptResend;
        if (guess_strategy == "fixed") {
          a.guess_strategy = gcore::AttackConfig::GuessStrategy::FixedKey;
          a.fixed_guess = guess;
        } else if (guess_strategy != "uniform") {
          std::cerr << "--guess-strategy must be uniform or fixed\n";
          return 1;
        }
        rep = gcore::intercept_resend(
            fam, gcore::ControlKey::from_string(dim, key), a, units, seed,
            threads);
      } else {
        std::cerr << "--kind must be intercept-resend or cloner\n";
        return 1;
      }
      return write_out(out, gcore::attack_report_json(fam, rep));
    }

    if (curve->parsed())
      return write_out(out, gcore::cloner_curve_csv(gcore::cloner_curve(grid)));

    if (verify->parsed()) {
      auto checks = gcore::verify_reference_figures();
      bool all = true;
      std::string content;
      if (format == "json") {
        content = gcore::paper_checks_json(checks);
        for (const auto& c : checks) all = all && c.pass;
      } else if (format == "text") {
        std::ostringstream os;
        for (const auto& c : checks) {
          all = all && c.pass;
          os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": expected "
             << c.expected << ", got " << c.actual << " (tol " << c.tolerance
             << ")\n";
        }
        os << (all ? "all checks passed\n" : "SOME CHECKS FAILED\n");
        content = os.str();
      } else {
        std::cerr << "--format must be text or json\n";
        return 1;
      }
      if (int rc = write_out(out, content)) return rc;
      return all ? 0 : 2;
    }

    if (tables->parsed())
      return write_out(out, gcore::tables_text(dim, particles));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}
