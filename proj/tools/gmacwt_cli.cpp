// Copyright 2026 The gmacwt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line frontend.  Reads a JSON channel config, runs the analysis the
// subcommand asks for, and emits plot-ready CSV / JSON files.  Exit codes:
//   0 ok, 1 check failed, 2 parse error, 3 domain error, 4 not covered.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmacwt/gmacwt.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNotCovered = 4;

gmacwt::ChannelParams load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw json::other_error::create(500, "cannot read config file " + path,
                                    nullptr);
  }
  const json doc = json::parse(in);
  gmacwt::ChannelParams params;
  for (const json& g : doc.at("gammas")) {
    params.gammas.push_back(g.get<double>());
  }
  const json& h = doc.at("h");
  if (h.is_number()) {
    params.gains = gmacwt::DegradedGains{h.get<double>()};
  } else if (h.is_array() && h.size() == 2) {
    params.gains =
        gmacwt::TwoUserGains{h[0].get<double>(), h[1].get<double>()};
  } else {
    gmacwt::fail(gmacwt::Fault::kUnsupportedGame,
                 "h must be a number or an array of two numbers");
  }
  params.lambda = doc.value("lambda", 0.0);
  gmacwt::validate(params);
  return params;
}

std::string fmt(double x, int precision) {
  return gmacwt::detail::format_fixed(x, precision);
}

std::string coalition_label(gmacwt::Coalition c, int count) {
  return "{" + gmacwt::detail::member_list(c, count) + "}";
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw json::other_error::create(500, "cannot write " + path, nullptr);
  }
  out << body;
}

// "start:stop:step" with step > 0 and start <= stop.
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::vector<double> points() const {
    std::vector<double> out;
    const int n = static_cast<int>(std::floor((stop - start) / step + 1e-9));
    for (int i = 0; i <= n; ++i) out.push_back(start + i * step);
    return out;
  }
};

AxisRange parse_axis(const std::string& text) {
  AxisRange range;
  char trailing = 0;
  const int got = std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &range.start,
                              &range.stop, &range.step, &trailing);
  if (got != 3 || !std::isfinite(range.start) || !std::isfinite(range.stop) ||
      !std::isfinite(range.step) || range.step <= 0.0 ||
      range.start > range.stop) {
    throw CLI::ValidationError(
        "sweep axes use start:stop:step with step > 0 and start <= stop, got "
        "'" + text + "'");
  }
  return range;
}

int run_value(const std::string& config_path, const std::string& spec,
              bool spec_given, int precision) {
  const gmacwt::ChannelParams params = load_config(config_path);
  gmacwt::Coalition mask = 0;
  if (!spec_given) {
    mask = gmacwt::full_coalition(params.size());
  } else if (!spec.empty()) {
    std::stringstream tokens(spec);
    std::string token;
    while (std::getline(tokens, token, ',')) {
      std::size_t used = 0;
      int member = 0;
      try {
        member = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != token.size()) {
        std::cerr << "parse error: coalition members must be integers, got '"
                  << token << "'\n";
        return kExitParse;
      }
      if (member < 1 || member > params.size()) {
        gmacwt::fail(gmacwt::Fault::kIndexOutOfRange,
                     "coalition members are numbered 1.." +
                         std::to_string(params.size()));
      }
      mask |= gmacwt::singleton(member - 1);
    }
  }
  std::cout << fmt(gmacwt::coalition_value(params, mask), precision) << "\n";
  return 0;
}

json axiom_to_json(const gmacwt::AxiomCheck& check) {
  return json{{"checked", check.checked},
              {"ok", check.ok},
              {"residual", check.residual}};
}

int run_allocate(const std::string& config_path, const std::string& out_path,
                 int precision) {
  const gmacwt::ChannelParams params = load_config(config_path);
  gmacwt::FairAllocation split;
  try {
    split = gmacwt::fair_allocation(params);
  } catch (const gmacwt::GameError& e) {
    if (gmacwt::is_two_user(params) &&
        (e.fault() == gmacwt::Fault::kGainsOutOfRange ||
         e.fault() == gmacwt::Fault::kPowerBelowLambda)) {
      std::cerr << "NotCovered: " << e.what() << "\n";
      return kExitNotCovered;
    }
    throw;
  }
  const gmacwt::AxiomReport axioms = gmacwt::verify_axioms(params, split);

  json report;
  report["gammas"] = params.gammas;
  if (gmacwt::is_degraded(params)) {
    report["h"] = std::get<gmacwt::DegradedGains>(params.gains).h;
  } else {
    const auto& gains = std::get<gmacwt::TwoUserGains>(params.gains);
    report["h"] = {gains.h1, gains.h2};
  }
  report["lambda"] = params.lambda;
  report["rates_bits"] = split.rates;
  report["ordering"] = split.ordering;
  report["grand_value_bits"] = split.grand_value;
  report["efficiency_gap"] = split.efficiency_gap;
  report["axioms"] = {{"covered", axioms.covered},
                      {"all_ok", axioms.all_ok()},
                      {"efficiency", axiom_to_json(axioms.efficiency)},
                      {"symmetry", axiom_to_json(axioms.symmetry)},
                      {"envy_freeness", axiom_to_json(axioms.envy_freeness)}};
  if (gmacwt::is_two_user(params)) {
    const gmacwt::GammaStar reduction = gmacwt::gamma_star(params);
    report["gamma_star"] = {{"transmitter", reduction.which + 1},
                            {"value", reduction.value},
                            {"degenerate", reduction.degenerate}};
  }
  write_file(out_path, report.dump(2) + "\n");

  for (std::size_t l = 0; l < split.rates.size(); ++l) {
    std::cout << "R" << l + 1 << " = " << fmt(split.rates[l], precision)
              << "\n";
  }
  std::cout << "report -> " << out_path << "\n";
  return 0;
}

int run_sweep(const std::string& config_path, const AxisRange& axis1,
              const AxisRange& axis2, const std::string& out_path,
              int precision) {
  gmacwt::ChannelParams params = load_config(config_path);
  if (params.size() != 2) {
    gmacwt::fail(gmacwt::Fault::kUnsupportedGame,
                 "sweeps need exactly two transmitters");
  }
  std::string body = "h1,h2,v1_bits,v2_bits,v12_bits,beneficial\n";
  int cells = 0;
  for (double h1 : axis1.points()) {
    for (double h2 : axis2.points()) {
      params.gains = gmacwt::TwoUserGains{h1, h2};
      const double v1 = gmacwt::value_two_user(params, 0b01);
      const double v2 = gmacwt::value_two_user(params, 0b10);
      const double v12 = gmacwt::value_two_user(params, 0b11);
      body += fmt(h1, precision) + "," + fmt(h2, precision) + "," +
              fmt(v1, precision) + "," + fmt(v2, precision) + "," +
              fmt(v12, precision) + "," + (v12 >= v1 + v2 ? "1" : "0") + "\n";
      ++cells;
    }
  }
  write_file(out_path, body);
  std::cout << cells << " cells -> " << out_path << "\n";
  return 0;
}

int run_region(const std::string& config_path, const std::string& which,
               const std::string& out_path, const std::string& json_path,
               int resolution, int precision) {
  const gmacwt::ChannelParams params = load_config(config_path);
  const gmacwt::RegionKind kind = which == "achievable"
                                      ? gmacwt::RegionKind::kAchievable
                                  : which == "core" ? gmacwt::RegionKind::kCore
                                                    : gmacwt::RegionKind::kCstar;
  const gmacwt::RegionPolygon polygon =
      gmacwt::export_two_user_polygons(params, kind, resolution);
  write_file(out_path, gmacwt::polygon_to_csv(polygon, precision));
  if (!json_path.empty()) {
    write_file(json_path, gmacwt::polygon_to_json(polygon) + "\n");
  }
  if (polygon.empty) {
    std::cout << which << " polygon: empty -> " << out_path << "\n";
  } else {
    std::cout << which << " polygon: " << polygon.vertices.size()
              << " vertices -> " << out_path << "\n";
  }
  return 0;
}

int run_verify(const std::string& config_path, int precision) {
  const gmacwt::ChannelParams params = load_config(config_path);
  const int count = params.size();
  bool any_fail = false;
  const auto line = [&](bool ok, const std::string& name,
                        const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) any_fail = true;
  };
  const auto skip = [](const std::string& name, const std::string& why) {
    std::cout << "[SKIP] " << name << ": " << why << "\n";
  };

  const gmacwt::Game game = gmacwt::build_game(params);
  const gmacwt::SuperadditivityReport super = gmacwt::is_superadditive(game);
  line(super.superadditive, "superadditivity",
       super.superadditive
           ? ""
           : "v" + coalition_label(super.first, count) + " + v" +
                 coalition_label(super.second, count) +
                 " exceeds the merged value by " +
                 fmt(super.shortfall, precision));
  if (count <= 6) {
    const gmacwt::SuperadditivityReport brute =
        gmacwt::brute_force_superadditivity(params);
    line(brute.superadditive == super.superadditive,
         "superadditivity routes agree", "");
  } else {
    skip("superadditivity routes agree",
         "brute force capped at six transmitters");
  }

  bool core_known_nonempty = false;
  if (count <= 16) {
    const gmacwt::CoreLpResult lp = gmacwt::core_nonempty_lp(game);
    core_known_nonempty = lp.feasible;
    line(lp.feasible, "core nonempty",
         lp.feasible ? "witness found, residual " + fmt(lp.residual, precision)
                     : "infeasible by " + fmt(lp.residual, precision));
    if (gmacwt::is_two_user(params) && params.lambda == 0.0 &&
        game.grand_value() > 0.0) {
      const bool closed_form_empty = gmacwt::core_is_empty_two_user(params);
      line(closed_form_empty == !lp.feasible, "core emptiness routes agree",
           "");
    }
  } else {
    skip("core nonempty", "LP capped at sixteen transmitters");
  }

  bool covered = true;
  std::string why;
  if (gmacwt::is_two_user(params)) {
    const auto& gains = std::get<gmacwt::TwoUserGains>(params.gains);
    const double ambient = gmacwt::ambient_gain(params);
    if (!(gains.h1 < ambient) || !(gains.h2 < ambient)) {
      covered = false;
      why = "an eavesdropper gain reaches the ambient gain";
    } else if (!(std::min(params.gammas[0], params.gammas[1]) >
                 params.lambda)) {
      covered = false;
      why = "a budget does not exceed the standing jammer power";
    }
  }
  if (!covered) {
    skip("fair allocation", "NotCovered, " + why);
  } else {
    const gmacwt::FairAllocation split = gmacwt::fair_allocation(params);
    std::string rates = "rates";
    for (std::size_t l = 0; l < split.rates.size(); ++l) {
      rates += (l == 0 ? " " : ", ") + fmt(split.rates[l], precision);
    }
    const gmacwt::AxiomReport axioms = gmacwt::verify_axioms(params, split);
    line(axioms.all_ok(), "allocation axioms",
         rates + "; efficiency " + fmt(axioms.efficiency.residual, 9) +
             ", symmetry " + fmt(axioms.symmetry.residual, 9) + ", envy " +
             fmt(axioms.envy_freeness.residual, 9));
    if (core_known_nonempty) {
      line(gmacwt::core_contains(game, split.rates), "allocation in core", "");
    } else {
      skip("allocation in core", "core is empty or untested");
    }
    if (gmacwt::is_degraded(params)) {
      line(gmacwt::cstar_contains(game, split.rates),
           "allocation in stable subset", "");
      line(gmacwt::degraded_region_contains(params, split.rates),
           "allocation achievable", "");
    } else {
      line(gmacwt::two_user_region_contains(params, split.rates),
           "allocation achievable", "");
    }
  }

  std::cout << (any_fail ? "result: FAIL\n" : "result: PASS\n");
  return any_fail ? kExitCheckFailed : 0;
}

struct LemmaDrawer {
  std::mt19937 rng;
  std::uniform_real_distribution<double> uniform{0.0, 1.0};

  explicit LemmaDrawer(unsigned seed) : rng(seed) {}

  gmacwt::LemmaParams draw(gmacwt::LemmaFunction fn) {
    gmacwt::LemmaParams p;
    p.k = 1 + static_cast<int>(rng() % 4);
    p.h1 = 0.5 * uniform(rng);
    p.h2 = p.h1 + 1e-3 + (1.0 - p.h1 - 1e-3) * uniform(rng);
    p.a = 0.1 + 4.9 * uniform(rng);
    p.b = fn == gmacwt::LemmaFunction::kF2 ? p.a + 0.1 + 4.9 * uniform(rng)
                                           : 0.1 + 4.9 * uniform(rng);
    p.c = 0.5 + 4.5 * uniform(rng);
    p.d = 0.1 + 4.9 * uniform(rng);
    return p;
  }

  std::vector<double> grid(gmacwt::LemmaFunction fn,
                           const gmacwt::LemmaParams& p, int points) {
    std::vector<double> out;
    out.reserve(points);
    if (gmacwt::lemma_direction(fn) > 0) {
      for (int i = 0; i < points; ++i) {
        out.push_back(std::pow(10.0, -2.0 + 4.0 * i / (points - 1)));
      }
    } else {
      const double hi =
          fn == gmacwt::LemmaFunction::kF4 ? 0.999 * p.c : 10.0;
      for (int i = 0; i < points; ++i) {
        out.push_back(hi * i / (points - 1));
      }
    }
    return out;
  }
};

int run_oracle(unsigned seed, int draws, int grid_points,
               const std::string& out_path) {
  const gmacwt::LemmaFunction functions[] = {
      gmacwt::LemmaFunction::kF1, gmacwt::LemmaFunction::kF2,
      gmacwt::LemmaFunction::kF3, gmacwt::LemmaFunction::kF4,
      gmacwt::LemmaFunction::kF5, gmacwt::LemmaFunction::kF6};
  LemmaDrawer drawer(seed);
  json report;
  report["seed"] = seed;
  report["draws"] = draws;
  report["grid_points"] = grid_points;
  report["functions"] = json::array();
  bool any_fail = false;
  for (gmacwt::LemmaFunction fn : functions) {
    int violations = 0;
    double worst_step = 0.0;
    double worst_sign_error = 0.0;
    for (int d = 0; d < draws; ++d) {
      const gmacwt::LemmaParams p = drawer.draw(fn);
      const std::vector<double> grid = drawer.grid(fn, p, grid_points);
      const gmacwt::MonotoneCheckReport check =
          gmacwt::check_monotone(fn, p, grid);
      if (!check.monotone) ++violations;
      worst_step = std::max(worst_step, check.worst_step);
      worst_sign_error =
          std::max(worst_sign_error, check.max_derivative_sign_error);
    }
    const bool ok = violations == 0 && worst_sign_error <= 1e-12;
    any_fail = any_fail || !ok;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%d draws, worst adverse step %.3g, worst derivative sign "
                  "error %.3g",
                  draws, worst_step, worst_sign_error);
    std::cout << (ok ? "[PASS] " : "[FAIL] ")
              << gmacwt::lemma_function_name(fn) << " "
              << (gmacwt::lemma_direction(fn) < 0 ? "non-increasing"
                                                  : "non-decreasing")
              << ": " << detail << "\n";
    report["functions"].push_back(
        {{"name", gmacwt::lemma_function_name(fn)},
         {"direction", gmacwt::lemma_direction(fn)},
         {"violations", violations},
         {"worst_adverse_step", worst_step},
         {"worst_derivative_sign_error", worst_sign_error},
         {"ok", ok}});
  }
  report["all_ok"] = !any_fail;
  if (!out_path.empty()) {
    write_file(out_path, report.dump(2) + "\n");
    std::cout << "report -> " << out_path << "\n";
  }
  std::cout << (any_fail ? "result: FAIL\n" : "result: PASS\n");
  return any_fail ? kExitCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coalitional secrecy-rate analysis for jammed Gaussian multiple-access "
      "wiretap channels"};
  app.require_subcommand(1);
  int precision = 6;
  app.add_option("--precision", precision,
                 "decimal places in printed numbers and CSV files")
      ->capture_default_str();

  std::string config_path;
  std::string coalition_spec;
  CLI::App* value_cmd =
      app.add_subcommand("value", "print the value of one coalition in bits");
  value_cmd->add_option("config", config_path, "JSON channel config")
      ->required();
  CLI::Option* coalition_opt = value_cmd->add_option(
      "coalition", coalition_spec,
      "comma-separated 1-based member list (default: all)");

  std::string allocate_out = "allocation_report.json";
  CLI::App* allocate_cmd = app.add_subcommand(
      "allocate", "compute the fair rate split and audit its axioms");
  allocate_cmd->add_option("config", config_path, "JSON channel config")
      ->required();
  allocate_cmd->add_option("--out", allocate_out, "report path")
      ->capture_default_str();

  std::string axis1_text = "0:2:0.1";
  std::string axis2_text = "0:2:0.1";
  std::string sweep_out = "sweep.csv";
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "tabulate coalition values over an eavesdropper-gain grid");
  sweep_cmd->add_option("config", config_path, "JSON channel config")
      ->required();
  sweep_cmd->add_option("--h1", axis1_text, "first gain axis start:stop:step")
      ->capture_default_str();
  sweep_cmd->add_option("--h2", axis2_text, "second gain axis start:stop:step")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "CSV path")->capture_default_str();

  std::string region_which;
  std::string region_out = "region.csv";
  std::string region_json;
  int region_resolution = 32;
  CLI::App* region_cmd = app.add_subcommand(
      "region", "export a two-transmitter rate polygon as CSV");
  region_cmd->add_option("config", config_path, "JSON channel config")
      ->required();
  region_cmd
      ->add_option("--which", region_which,
                   "one of achievable, core, cstar")
      ->required()
      ->check(CLI::IsMember({"achievable", "core", "cstar"}));
  region_cmd->add_option("--out", region_out, "CSV path")
      ->capture_default_str();
  region_cmd->add_option("--json", region_json, "optional JSON path");
  region_cmd
      ->add_option("--resolution", region_resolution,
                   "power grid levels per transmitter")
      ->capture_default_str();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run every applicable cross-check on one instance");
  verify_cmd->add_option("config", config_path, "JSON channel config")
      ->required();

  unsigned oracle_seed = 12345;
  int oracle_draws = 100;
  int oracle_grid = 101;
  std::string oracle_out;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "scan the six reference functions for monotonicity");
  oracle_cmd->add_option("--seed", oracle_seed, "random seed")
      ->capture_default_str();
  oracle_cmd->add_option("--draws", oracle_draws, "parameter draws per function")
      ->capture_default_str();
  oracle_cmd->add_option("--grid", oracle_grid, "points per scan grid")
      ->capture_default_str();
  oracle_cmd->add_option("--out", oracle_out, "optional JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (value_cmd->parsed()) {
      return run_value(config_path, coalition_spec, coalition_opt->count() > 0,
                       precision);
    }
    if (allocate_cmd->parsed()) {
      return run_allocate(config_path, allocate_out, precision);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(config_path, parse_axis(axis1_text),
                       parse_axis(axis2_text), sweep_out, precision);
    }
    if (region_cmd->parsed()) {
      return run_region(config_path, region_which, region_out, region_json,
                        region_resolution, precision);
    }
    if (verify_cmd->parsed()) {
      return run_verify(config_path, precision);
    }
    if (oracle_cmd->parsed()) {
      if (oracle_draws < 1 || oracle_grid < 2) {
        std::cerr << "parse error: draws must be >= 1 and grid >= 2\n";
        return kExitParse;
      }
      return run_oracle(oracle_seed, oracle_draws, oracle_grid, oracle_out);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gmacwt::GameError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
