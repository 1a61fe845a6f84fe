#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shiftrisk {

/// Target system scenario. Everything is held in MW; JSON documents carry GW.
struct Scenario {
  std::string id;
  double lambda_p = 0.0;  // MW/degC
  double gamma_p = 0.0;   // MW/(m/s)
  std::optional<double> phi_p;  // MW year effect; empty until calibrated
  double cap_onshore_mw = 0.0;
  double cap_offshore_mw = 0.0;

  double installed_wind_mw() const noexcept { return cap_onshore_mw + cap_offshore_mw; }
  Scenario with_year_effect(double phi) const;
  void validate() const;
};

/// Reference scenarios S1-S4: present day, then future wind with low/medium/high heating.
std::vector<Scenario> reference_scenarios();

std::vector<Scenario> parse_scenarios_json(std::string_view text, std::string_view source = "scenarios");
std::vector<Scenario> load_scenarios(const std::filesystem::path& path);
std::string scenarios_to_json(const std::vector<Scenario>& scenarios);

}  // namespace shiftrisk
