// shiftrisk command-line tool: synth, fit, risk, shift.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shiftrisk/calibration.hpp"
#include "shiftrisk/capacity.hpp"
#include "shiftrisk/csv_io.hpp"
#include "shiftrisk/demand_model.hpp"
#include "shiftrisk/error.hpp"
#include "shiftrisk/number_format.hpp"
#include "shiftrisk/scenario.hpp"
#include "shiftrisk/shift.hpp"
#include "shiftrisk/sweep.hpp"
#include "shiftrisk/synthetic.hpp"

namespace fs = std::filesystem;
using namespace shiftrisk;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed: " + path.string());
}

int to_int(std::string_view text, std::string_view what) {
  try {
    return static_cast<int>(parse_integer(text));
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  }
}

double to_double(std::string_view text, std::string_view what) {
  try {
    return parse_double(text);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  }
}

// "A..B" with A <= B.
std::pair<int, int> parse_range(const std::string& text, std::string_view what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError(std::string(what) + ": expected A..B, got '" + text + "'");
  const int a = to_int(text.substr(0, dots), what);
  const int b = to_int(text.substr(dots + 2), what);
  if (a > b) throw InputError(std::string(what) + ": empty range '" + text + "'");
  return {a, b};
}

// "2009..2019" or "2009,2011,2012".
std::vector<int> parse_winters(const std::string& text) {
  if (text.empty()) throw InputError("--winters is required");
  std::vector<int> out;
  if (text.find("..") != std::string::npos) {
    const auto [a, b] = parse_range(text, "--winters");
    for (int w = a; w <= b; ++w) out.push_back(w);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item, "--winters"));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string expand(const std::string& pattern, int winter) {
  std::string out = pattern;
  const std::string key = "{winter}";
  for (auto pos = out.find(key); pos != std::string::npos; pos = out.find(key, pos)) {
    out.replace(pos, key.size(), std::to_string(winter));
  }
  return out;
}

struct CorpusArgs {
  std::string demand;
  std::string weather;
  std::string winters;
};

void add_corpus_options(CLI::App* cmd, CorpusArgs& args) {
  cmd->add_option("--demand", args.demand, "Demand CSV path; {winter} is replaced by the winter id");
  cmd->add_option("--weather", args.weather, "Weather CSV path; {winter} is replaced by the winter id");
  cmd->add_option("--winters", args.winters, "Winters as A..B or a comma list");
}

std::vector<WinterDataset> load_corpus(const CorpusArgs& args) {
  if (args.demand.empty()) throw InputError("--demand is required");
  if (args.weather.empty()) throw InputError("--weather is required");
  const auto winters = parse_winters(args.winters);
  const bool templated = args.demand.find("{winter}") != std::string::npos &&
                         args.weather.find("{winter}") != std::string::npos;
  if (winters.size() > 1 && !templated) {
    throw InputError("--demand and --weather need a {winter} placeholder for several winters");
  }
  std::vector<WinterDataset> out;
  for (int w : winters) out.push_back(load_winter(expand(args.demand, w), expand(args.weather, w), w));
  return out;
}

// Config file: a flat JSON object keyed by long flag names (with or without the dashes).
// Values given on the command line win.
void apply_config(CLI::App* cmd, const std::string& path) {
  const std::string text = read_text(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError(path + ": config must be a JSON object");
  auto as_text = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
    return v.dump();
  };
  for (const auto& [key, value] : doc.items()) {
    std::string name = key.rfind("--", 0) == 0 ? key.substr(2) : key;
    std::replace(name.begin(), name.end(), '_', '-');
    if (name == "config") continue;
    CLI::Option* opt = cmd->get_option_no_throw("--" + name);
    if (opt == nullptr) throw InputError(path + ": unknown option '" + key + "' for " + cmd->get_name());
    if (opt->count() > 0) continue;
    if (value.is_array()) {
      for (const auto& item : value) opt->add_result(as_text(item));
    } else {
      opt->add_result(as_text(value));
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw InputError(path + ": " + key + ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------------------- synth

struct SynthArgs {
  std::string spec;
  std::optional<std::uint64_t> seed;
  int winters = 11;
  std::optional<int> first_winter;
  std::vector<std::string> cold_spells;
  std::optional<double> residual_sd;
  std::optional<double> dip_mw;
  double fleet_mw = 60000.0;
  std::string out;
};

// DATE:LEN:DELTA[:WIND_SCALE]
ColdSpell parse_cold_spell(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4) {
    throw InputError("--cold-spell: expected DATE:DAYS:DELTA[:WIND_SCALE], got '" + text + "'");
  }
  ColdSpell spell;
  try {
    spell.start = parse_date(parts[0]);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--cold-spell: ") + e.what());
  }
  spell.length_days = to_int(parts[1], "--cold-spell");
  spell.delta_c = to_double(parts[2], "--cold-spell");
  if (parts.size() == 4) spell.wind_scale = to_double(parts[3], "--cold-spell");
  return spell;
}

int cmd_synth(const SynthArgs& args) {
  if (args.out.empty()) throw InputError("--out is required");
  SynthSpec spec;
  if (!args.spec.empty()) {
    spec = parse_synth_spec_json(read_text(args.spec), args.spec);
  } else {
    spec.residual_sd = 640.0;
  }
  if (args.seed) spec.rng_seed = *args.seed;
  if (args.first_winter) spec.first_winter = *args.first_winter;
  if (args.residual_sd) spec.residual_sd = *args.residual_sd;
  if (args.dip_mw) {
    ResidualDip dip = spec.christmas_dip.value_or(ResidualDip{});
    dip.suppression_mw = *args.dip_mw;
    spec.christmas_dip = dip;
  }
  for (const auto& c : args.cold_spells) spec.cold_spells.push_back(parse_cold_spell(c));
  if (args.winters < 1) throw InputError("--winters must be at least 1");
  if (!(args.fleet_mw > 0.0)) throw InputError("--fleet-mw must be positive");
  try {
    spec.validate(args.winters);
  } catch (const ContractError& e) {
    throw InputError(e.what());
  }

  const fs::path dir(args.out);
  fs::create_directories(dir);
  const auto data = generate_synthetic(spec, args.winters);
  for (const auto& w : data) {
    const auto id = std::to_string(w.calendar.winter_id);
    write_winter(w, dir / ("demand_" + id + ".csv"), dir / ("weather_" + id + ".csv"));
  }
  write_fleet_csv(dir / "fleet.csv", synthetic_fleet(args.fleet_mw, spec.rng_seed));
  write_text(dir / "scenarios.json", scenarios_to_json(reference_scenarios()));
  write_text(dir / "synth_spec.json", synth_spec_to_json(spec));
  std::cout << "synth winters=" << data.size() << " first=" << spec.first_winter << " seed=" << spec.rng_seed
            << " out=" << dir.string() << '\n';
  return 0;
}

// ---------------------------------------------------------------------------- fit

struct FitArgs {
  CorpusArgs corpus;
  std::optional<int> reference_winter;
  bool no_year_effects = false;
  std::string out;
};

int cmd_fit(const FitArgs& args) {
  if (args.out.empty()) throw InputError("--out is required");
  const auto data = load_corpus(args.corpus);
  DesignOptions opts;
  opts.reference_winter = args.reference_winter;
  opts.year_effects = !args.no_year_effects;
  const auto fit = fit_ols(build_design_matrix(data, opts));
  write_text(args.out, fit_to_json(fit));

  const auto& c = fit.coefficients;
  const auto& se = fit.standard_errors;
  std::cout << "fit winters=" << data.size() << " days=" << fit.n_obs << " coefficients=" << fit.n_coefficients()
            << '\n';
  std::cout << "diagnostics adjusted_r2=" << format_double(fit.adjusted_r2)
            << " residual_sd_mw=" << format_double(fit.residual_sd)
            << " lag1_autocorr=" << format_double(fit.lag1_autocorr) << '\n';
  auto row = [](std::string_view name, double est, double err) {
    std::cout << "coef " << name << " estimate=" << format_double(est) << " se=" << format_double(err) << '\n';
  };
  row("alpha", c.alpha, se.alpha);
  row("lambda1", c.lambda1, se.lambda1);
  row("beta1", c.beta1, se.beta1);
  row("beta2", c.beta2, se.beta2);
  row("gamma1", c.gamma1, se.gamma1);
  for (std::size_t i = 0; i < c.omega.size(); ++i) {
    row("omega_" + std::to_string(c.omega_day(i)), c.omega[i], se.omega[i]);
  }
  for (const auto& [w, v] : c.phi) row("phi_" + std::to_string(w), v, se.phi.at(w));
  return 0;
}

// ---------------------------------------------------------------------------- risk

struct RiskArgs {
  CorpusArgs corpus;
  std::string fit;
  std::string fleet;
  std::string scenarios;
  std::vector<std::string> scenario_ids;
  std::string mode = "empirical";
  std::string sweep = "none";
  std::string tau;
  std::string windows;
  std::optional<double> target_lole;
  std::optional<double> target_lolh;
  bool lolh = false;
  bool calibrate_shifted = false;
  int grid_step = 1;
  unsigned threads = 1;
  std::string out;
  std::string windows_out;
  std::string json_out;
};

std::vector<TauWindow> parse_windows(const std::string& text) {
  if (text == "standard") return standard_shift_windows();
  std::vector<TauWindow> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto [a, b] = parse_range(item, "--windows");
    out.push_back({a, b});
  }
  if (out.empty()) throw InputError("--windows: no windows given");
  return out;
}

RegressionFit obtain_fit(const std::string& path, std::span<const WinterDataset> data) {
  if (!path.empty()) return fit_from_json(read_text(path), path);
  return fit_ols(build_design_matrix(data));
}

std::vector<Scenario> select_scenarios(const std::string& path, const std::vector<std::string>& ids) {
  auto all = path.empty() ? reference_scenarios() : load_scenarios(path);
  std::vector<Scenario> out;
  if (ids.empty()) {
    out = all;
  } else {
    for (const auto& id : ids) {
      auto it = std::find_if(all.begin(), all.end(), [&](const Scenario& s) { return s.id == id; });
      if (it == all.end()) throw InputError("unknown scenario '" + id + "'");
      out.push_back(*it);
    }
  }
  std::sort(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
  out.erase(std::unique(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) { return a.id == b.id; }),
            out.end());
  return out;
}

int cmd_risk(const RiskArgs& args) {
  if (args.out.empty()) throw InputError("--out is required");
  if (args.fleet.empty()) throw InputError("--fleet is required");
  if (args.target_lole && args.target_lolh) throw InputError("--target-lole and --target-lolh are exclusive");
  if (args.sweep != "none" && args.sweep != "dow" && args.sweep != "weather") {
    throw InputError("--sweep must be dow or weather");
  }
  if (args.grid_step < 1) throw InputError("--grid-step must be positive");
  const ResidualMode mode = [&] {
    try {
      return parse_residual_mode(args.mode);
    } catch (const Error& e) {
      throw InputError(std::string("--mode: ") + e.what());
    }
  }();

  std::vector<TauWindow> windows;
  if (!args.windows.empty()) {
    if (args.sweep != "weather") throw InputError("--windows needs --sweep weather");
    windows = parse_windows(args.windows);
  }
  int tau_min = 0;
  int tau_max = 0;
  if (args.sweep == "weather") {
    if (!args.tau.empty()) {
      std::tie(tau_min, tau_max) = parse_range(args.tau, "--tau");
    } else if (!windows.empty()) {
      for (const auto& w : windows) {
        tau_min = std::min(tau_min, w.tau_min);
        tau_max = std::max(tau_max, w.tau_max);
      }
    } else {
      throw InputError("--sweep weather needs --tau or --windows");
    }
  } else if (!args.tau.empty()) {
    throw InputError("--tau needs --sweep weather");
  }

  const auto data = load_corpus(args.corpus);
  const auto fit = obtain_fit(args.fit, data);
  const auto fleet = load_fleet_csv(args.fleet);
  const auto plain = convolve_fleet(fleet, args.grid_step);
  const auto dist = mode == ResidualMode::stochastic ? smear_gaussian(plain, fit.residual_sd) : plain;
  const bool with_lolh = args.lolh || args.target_lolh.has_value();

  SweepConfig sweep;
  sweep.kind = args.sweep == "dow" ? SweepKind::dow : SweepKind::weather;
  sweep.tau_min = tau_min;
  sweep.tau_max = tau_max;
  sweep.mode = mode;
  sweep.with_lolh = with_lolh;
  sweep.threads = std::max(1U, args.threads);

  std::vector<RiskResult> rows;
  std::string windows_csv;
  for (auto scenario : select_scenarios(args.scenarios, args.scenario_ids)) {
    if (args.target_lole || args.target_lolh) {
      const RiskMetric metric = args.target_lole ? RiskMetric::lole : RiskMetric::lolh;
      const double target = args.target_lole ? *args.target_lole : *args.target_lolh;
      CalibrationOptions copts;
      if (args.calibrate_shifted) {
        copts.alignments.clear();
        if (sweep.kind == SweepKind::dow) {
          for (int k = -3; k <= 3; ++k) copts.alignments.push_back({0, k});
        } else {
          for (int tau = tau_min; tau <= tau_max; ++tau) copts.alignments.push_back({tau, 0});
        }
      }
      const auto cal = calibrate_year_effect(target, scenario, fit, data, dist, mode, metric, copts);
      scenario = scenario.with_year_effect(cal.phi_p);
      std::printf("calibration scenario=%s metric=%s target=%s phi_mw=%.2f achieved=%.6f iterations=%d\n",
                  scenario.id.c_str(), metric == RiskMetric::lole ? "lole" : "lolh", format_double(target).c_str(),
                  cal.phi_p, cal.achieved, cal.bracket_iterations + cal.bisection_iterations);
    } else if (!scenario.phi_p) {
      throw InputError("scenario " + scenario.id + " has no phi_mw; give --target-lole or --target-lolh");
    }

    auto result = shift_sweep(scenario, fit, data, dist, sweep);
    if (!windows.empty()) {
      const auto means = window_average(result, windows, with_lolh && args.target_lolh.has_value());
      std::string block = windows_to_csv(scenario.id, means);
      if (!windows_csv.empty()) block.erase(0, block.find('\n') + 1);
      windows_csv += block;
      for (const auto& m : means) {
        std::printf("window scenario=%s window=%s mean=%.6f\n", scenario.id.c_str(), m.label.c_str(),
                    m.all_winters);
      }
    }
    if (sweep.kind == SweepKind::dow && args.sweep == "dow") {
      const auto avg = dow_average(result, with_lolh && args.target_lolh.has_value());
      std::printf("dow_average scenario=%s mean=%.6f\n", scenario.id.c_str(), avg.all_winters);
    }
    rows.insert(rows.end(), std::make_move_iterator(result.begin()), std::make_move_iterator(result.end()));
  }

  write_text(args.out, sweep_to_csv(rows));
  if (!windows.empty()) {
    fs::path wpath = args.windows_out;
    if (wpath.empty()) {
      const fs::path out(args.out);
      wpath = out.parent_path() / (out.stem().string() + "_windows.csv");
    }
    write_text(wpath, windows_csv);
  }
  if (!args.json_out.empty()) write_text(args.json_out, sweep_to_json(rows));
  std::cout << "risk rows=" << rows.size() << " out=" << args.out << '\n';
  return 0;
}

// ---------------------------------------------------------------------------- shift

struct ShiftArgs {
  CorpusArgs corpus;
  std::string fit;
  std::string scenarios;
  std::string scenario;
  std::optional<double> phi_mw;
  int tau = 0;
  int k = 0;
  std::string mode = "empirical";
  std::string out;
};

int cmd_shift(const ShiftArgs& args) {
  if (args.out.empty()) throw InputError("--out is required");
  if (args.scenario.empty()) throw InputError("--scenario is required");
  if (args.k < -3 || args.k > 3) throw InputError("--k must lie in -3..3");
  const ResidualMode mode = parse_residual_mode(args.mode);
  const auto data = load_corpus(args.corpus);
  const auto fit = obtain_fit(args.fit, data);
  auto scenario = select_scenarios(args.scenarios, {args.scenario}).front();
  if (args.phi_mw) scenario = scenario.with_year_effect(*args.phi_mw);
  if (!scenario.phi_p) throw InputError("scenario " + scenario.id + " has no phi_mw; give --phi-mw");

  const fs::path dir(args.out);
  fs::create_directories(dir);
  for (const auto& w : data) {
    const auto sd = apply_shift(map_to_scenario(fit, w, scenario), {args.tau, args.k});
    const auto id = std::to_string(w.calendar.winter_id);
    write_shifted_demand_csv(dir / ("demand_" + scenario.id + "_" + id + ".csv"), sd, w,
                             mode == ResidualMode::empirical);
  }
  std::cout << "shift scenario=" << scenario.id << " tau=" << args.tau << " k=" << args.k
            << " winters=" << data.size() << " out=" << dir.string() << '\n';
  return 0;
}

int report(std::string_view kind, const std::string& message, int code) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  std::cerr << "error kind=" << kind << " exit=" << code << ": " << line << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource adequacy risk under day-of-week and weather shifts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "shiftrisk 0.1.0");

  SynthArgs synth;
  std::string synth_config;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth_cmd->add_option("--config", synth_config, "JSON file of default flag values");
  synth_cmd->add_option("--spec", synth.spec, "Synthetic generator spec (JSON)");
  synth_cmd->add_option("--seed", synth.seed, "RNG seed (overrides --spec)");
  synth_cmd->add_option("--winters", synth.winters, "Number of winters")->capture_default_str();
  synth_cmd->add_option("--first-winter", synth.first_winter, "Id of the first winter");
  synth_cmd->add_option("--cold-spell", synth.cold_spells, "Planted spell DATE:DAYS:DELTA[:WIND_SCALE]");
  synth_cmd->add_option("--residual-sd", synth.residual_sd, "Residual SD in MW");
  synth_cmd->add_option("--dip-mw", synth.dip_mw, "Christmas residual suppression in MW");
  synth_cmd->add_option("--fleet-mw", synth.fleet_mw, "Installed thermal capacity of fleet.csv")
      ->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "Output directory");

  FitArgs fit;
  std::string fit_config;
  auto* fit_cmd = app.add_subcommand("fit", "Fit the daily-peak demand regression");
  fit_cmd->add_option("--config", fit_config, "JSON file of default flag values");
  add_corpus_options(fit_cmd, fit.corpus);
  fit_cmd->add_option("--reference-winter", fit.reference_winter, "Winter without a year effect (default latest)");
  fit_cmd->add_flag("--no-year-effects", fit.no_year_effects, "Drop the winter indicators");
  fit_cmd->add_option("--out", fit.out, "Fit JSON output");

  RiskArgs risk;
  std::string risk_config;
  auto* risk_cmd = app.add_subcommand("risk", "Calibrate, sweep shifts and report LOLE");
  risk_cmd->add_option("--config", risk_config, "JSON file of default flag values");
  add_corpus_options(risk_cmd, risk.corpus);
  risk_cmd->add_option("--fit", risk.fit, "Fit JSON (default: fit the corpus)");
  risk_cmd->add_option("--fleet", risk.fleet, "Fleet CSV");
  risk_cmd->add_option("--scenarios", risk.scenarios, "Scenario JSON (default: built-in S1-S4)");
  risk_cmd->add_option("--scenario", risk.scenario_ids, "Restrict to these scenario ids");
  risk_cmd->add_option("--mode", risk.mode, "empirical or stochastic")->capture_default_str();
  risk_cmd->add_option("--sweep", risk.sweep, "none, dow or weather")->capture_default_str();
  risk_cmd->add_option("--tau", risk.tau, "Weather shift range A..B");
  risk_cmd->add_option("--windows", risk.windows, "standard or a list like -3..3,-7..6");
  risk_cmd->add_option("--target-lole", risk.target_lole, "Calibrate phi to this mean LOLE (days/winter)");
  risk_cmd->add_option("--target-lolh", risk.target_lolh, "Calibrate phi to this mean LOLH (hours/winter)");
  risk_cmd->add_flag("--lolh", risk.lolh, "Also compute LOLH");
  risk_cmd->add_flag("--calibrate-shifted", risk.calibrate_shifted,
                     "Calibrate to the mean over the sweep's shifts instead of the historic alignment");
  risk_cmd->add_option("--grid-step", risk.grid_step, "Capacity lattice step in MW")->capture_default_str();
  risk_cmd->add_option("--threads", risk.threads, "Worker threads for sweeps")->capture_default_str();
  risk_cmd->add_option("--out", risk.out, "Sweep CSV output");
  risk_cmd->add_option("--windows-out", risk.windows_out, "Window means CSV (default <out>_windows.csv)");
  risk_cmd->add_option("--json", risk.json_out, "Sweep JSON with per-day LOLP");

  ShiftArgs shift;
  std::string shift_config;
  auto* shift_cmd = app.add_subcommand("shift", "Export shifted scenario demand");
  shift_cmd->add_option("--config", shift_config, "JSON file of default flag values");
  add_corpus_options(shift_cmd, shift.corpus);
  shift_cmd->add_option("--fit", shift.fit, "Fit JSON (default: fit the corpus)");
  shift_cmd->add_option("--scenarios", shift.scenarios, "Scenario JSON (default: built-in S1-S4)");
  shift_cmd->add_option("--scenario", shift.scenario, "Scenario id");
  shift_cmd->add_option("--phi-mw", shift.phi_mw, "Year effect for the scenario in MW");
  shift_cmd->add_option("--tau", shift.tau, "Weather shift in days");
  shift_cmd->add_option("--k", shift.k, "Day-of-week shift, -3..3");
  shift_cmd->add_option("--mode", shift.mode, "empirical keeps residuals, stochastic writes the central estimate");
  shift_cmd->add_option("--out", shift.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("usage", e.what(), 2);
  }

  try {
    if (synth_cmd->parsed()) {
      if (!synth_config.empty()) apply_config(synth_cmd, synth_config);
      return cmd_synth(synth);
    }
    if (fit_cmd->parsed()) {
      if (!fit_config.empty()) apply_config(fit_cmd, fit_config);
      return cmd_fit(fit);
    }
    if (risk_cmd->parsed()) {
      if (!risk_config.empty()) apply_config(risk_cmd, risk_config);
      return cmd_risk(risk);
    }
    if (shift_cmd->parsed()) {
      if (!shift_config.empty()) apply_config(shift_cmd, shift_config);
      return cmd_shift(shift);
    }
  } catch (const InputError& e) {
    return report("input", e.what(), 2);
  } catch (const fs::filesystem_error& e) {
    return report("input", e.what(), 2);
  } catch (const NumericalError& e) {
    return report("numerical", e.what(), 3);
  } catch (const ContractError& e) {
    return report("contract", e.what(), 3);
  } catch (const std::exception& e) {
    return report("internal", e.what(), 3);
  }
  return 0;
}
