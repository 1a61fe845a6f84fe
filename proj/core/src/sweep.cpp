#include "shiftrisk/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "shiftrisk/error.hpp"
#include "shiftrisk/number_format.hpp"

namespace shiftrisk {

std::vector<RiskResult> shift_sweep(const Scenario& scenario, const RegressionFit& fit,
                                    std::span<const WinterDataset> winters, const CapacityDistribution& dist,
                                    const SweepConfig& config) {
  std::vector<ShiftSpec> shifts;
  if (config.kind == SweepKind::dow) {
    for (int k = -3; k <= 3; ++k) shifts.push_back({0, k});
  } else {
    if (config.tau_min > config.tau_max) throw ContractError("shift_sweep: empty tau range");
    for (int tau = config.tau_min; tau <= config.tau_max; ++tau) shifts.push_back({tau, 0});
  }

  std::vector<ScenarioDemand> bases;
  bases.reserve(winters.size());
  for (const auto& w : winters) {
    bases.push_back(map_to_scenario(fit, w, scenario));
    check_mode(dist, bases.back(), config.mode);
  }

  const std::size_t cells = winters.size() * shifts.size();
  std::vector<RiskResult> out(cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      try {
        const std::size_t wi = i / shifts.size();
        const ScenarioDemand sd = apply_shift(bases[wi], shifts[i % shifts.size()]);
        out[i] = config.with_lolh ? lolh(dist, sd, winters[wi], hourly_wind(sd), config.mode)
                                  : lole(dist, sd, daily_wind(sd), config.mode);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(cells)));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string TauWindow::label() const {
  if (tau_min == 0 && tau_max == 0) return "hindcast";
  if (tau_min == -tau_max) return "pm" + std::to_string(tau_max);
  return "(" + std::to_string(tau_min) + ",+" + std::to_string(tau_max) + ")";
}

std::vector<TauWindow> standard_shift_windows() { return {{0, 0}, {-3, 3}, {-7, 6}, {-10, 10}, {-14, 13}, {-21, 20}}; }

namespace {

double metric_of(const RiskResult& r, bool use_lolh) {
  if (!use_lolh) return r.lole;
  if (!r.lolh) throw ContractError("window_average: sweep has no LOLH values");
  return *r.lolh;
}

}  // namespace

std::vector<WindowMean> window_average(std::span<const RiskResult> sweep, std::span<const TauWindow> windows,
                                       bool use_lolh) {
  // (winter, tau) -> value, only for k == 0 rows.
  std::map<int, std::map<int, double>> by_winter;
  for (const auto& r : sweep) {
    if (r.shift.k == 0) by_winter[r.winter_id][r.shift.tau] = metric_of(r, use_lolh);
  }
  if (by_winter.empty()) throw ContractError("window_average: empty sweep");
  std::vector<WindowMean> out;
  for (const auto& win : windows) {
    if (win.tau_min > win.tau_max) throw ContractError("window_average: window " + win.label() + " is empty");
    WindowMean m;
    m.label = win.label();
    m.tau_min = win.tau_min;
    m.tau_max = win.tau_max;
    double all = 0.0;
    for (const auto& [winter, values] : by_winter) {
      double sum = 0.0;
      for (int tau = win.tau_min; tau <= win.tau_max; ++tau) {
        auto it = values.find(tau);
        if (it == values.end()) {
          throw ContractError("window_average: window " + win.label() + " needs tau = " + std::to_string(tau) +
                              " for winter " + std::to_string(winter) + ", which the sweep does not cover");
        }
        sum += it->second;
      }
      const double mean = sum / static_cast<double>(win.tau_max - win.tau_min + 1);
      m.per_winter[winter] = mean;
      all += mean;
    }
    m.all_winters = all / static_cast<double>(by_winter.size());
    out.push_back(std::move(m));
  }
  return out;
}

WindowMean dow_average(std::span<const RiskResult> sweep, bool use_lolh) {
  std::map<int, std::map<int, double>> by_winter;
  for (const auto& r : sweep) {
    if (r.shift.tau == 0) by_winter[r.winter_id][wrap_dow_shift(r.shift.k)] = metric_of(r, use_lolh);
  }
  if (by_winter.empty()) throw ContractError("dow_average: empty sweep");
  WindowMean m;
  m.label = "dow7";
  double all = 0.0;
  for (const auto& [winter, values] : by_winter) {
    if (values.size() != static_cast<std::size_t>(kDaysPerWeek)) {
      throw ContractError("dow_average: winter " + std::to_string(winter) + " lacks some of the 7 alignments");
    }
    double sum = 0.0;
    for (const auto& [k, v] : values) sum += v;
    m.per_winter[winter] = sum / kDaysPerWeek;
    all += m.per_winter[winter];
  }
  m.all_winters = all / static_cast<double>(by_winter.size());
  return m;
}

std::string sweep_to_csv(std::span<const RiskResult> sweep) {
  std::ostringstream out;
  out << "scenario,winter,tau,k,mode,lole,lolh\n";
  for (const auto& r : sweep) {
    out << r.scenario_id << ',' << r.winter_id << ',' << r.shift.tau << ',' << r.shift.k << ',' << to_string(r.mode)
        << ',' << format_double(r.lole) << ',' << (r.lolh ? format_double(*r.lolh) : "") << '\n';
  }
  return out.str();
}

std::string windows_to_csv(const std::string& scenario_id, std::span<const WindowMean> windows) {
  std::ostringstream out;
  out << "scenario,window,tau_min,tau_max,winter,mean\n";
  for (const auto& w : windows) {
    for (const auto& [winter, v] : w.per_winter) {
      out << scenario_id << ',' << w.label << ',' << w.tau_min << ',' << w.tau_max << ',' << winter << ','
          << format_double(v) << '\n';
    }
    out << scenario_id << ',' << w.label << ',' << w.tau_min << ',' << w.tau_max << ",all,"
        << format_double(w.all_winters) << '\n';
  }
  return out.str();
}

std::string sweep_to_json(std::span<const RiskResult> sweep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : sweep) {
    nlohmann::json row{{"scenario", r.scenario_id},
                       {"winter", r.winter_id},
                       {"tau", r.shift.tau},
                       {"k", r.shift.k},
                       {"mode", std::string(to_string(r.mode))},
                       {"lole", r.lole},
                       {"per_day_lolp", r.per_day_lolp}};
    row["lolh"] = r.lolh ? nlohmann::json(*r.lolh) : nlohmann::json(nullptr);
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"results", rows}}.dump(1) + "\n";
}

}  // namespace shiftrisk
