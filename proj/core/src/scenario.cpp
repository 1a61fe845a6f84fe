#include "shiftrisk/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "shiftrisk/error.hpp"

namespace shiftrisk {

namespace {
constexpr double kMwPerGw = 1000.0;
}

Scenario Scenario::with_year_effect(double phi) const {
  Scenario s = *this;
  s.phi_p = phi;
  return s;
}

void Scenario::validate() const {
  if (cap_onshore_mw < 0.0 || cap_offshore_mw < 0.0) {
    throw ValidationError("scenario " + id + ": installed wind capacity must be non-negative");
  }
  if (lambda_p > 0.0) {
    throw ValidationError("scenario " + id + ": temperature sensitivity must be <= 0 (demand rises as it gets colder)");
  }
}

std::vector<Scenario> reference_scenarios() {
  auto gw = [](double v) { return v * kMwPerGw; };
  return {
      {"S1", gw(-0.6), gw(0.125), std::nullopt, gw(14), gw(16)},
      {"S2", gw(-0.6), gw(0.125), std::nullopt, gw(25), gw(40)},
      {"S3", gw(-1.2), gw(0.25), std::nullopt, gw(25), gw(40)},
      {"S4", gw(-2.0), gw(0.42), std::nullopt, gw(25), gw(40)},
  };
}

// {"scenarios": [{"id", "lambda_gw_per_c", "gamma_gw_per_ms", "onshore_gw", "offshore_gw", "phi_mw"?}]}
std::vector<Scenario> parse_scenarios_json(std::string_view text, std::string_view source) {
  const std::string label(source);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(label + ": " + e.what());
  }
  const nlohmann::json& list = doc.is_array() ? doc : doc.value("scenarios", nlohmann::json::array());
  if (!list.is_array() || list.empty()) throw InputError(label + ": no scenarios defined");
  std::vector<Scenario> out;
  for (const auto& item : list) {
    try {
      Scenario s;
      s.id = item.at("id").get<std::string>();
      s.lambda_p = item.at("lambda_gw_per_c").get<double>() * kMwPerGw;
      s.gamma_p = item.at("gamma_gw_per_ms").get<double>() * kMwPerGw;
      s.cap_onshore_mw = item.at("onshore_gw").get<double>() * kMwPerGw;
      s.cap_offshore_mw = item.at("offshore_gw").get<double>() * kMwPerGw;
      if (item.contains("phi_mw") && !item["phi_mw"].is_null()) s.phi_p = item["phi_mw"].get<double>();
      s.validate();
      out.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(label + ": " + e.what());
    }
  }
  return out;
}

std::vector<Scenario> load_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenarios_json(ss.str(), path.string());
}

std::string scenarios_to_json(const std::vector<Scenario>& scenarios) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : scenarios) {
    nlohmann::json item{{"id", s.id},
                        {"lambda_gw_per_c", s.lambda_p / kMwPerGw},
                        {"gamma_gw_per_ms", s.gamma_p / kMwPerGw},
                        {"onshore_gw", s.cap_onshore_mw / kMwPerGw},
                        {"offshore_gw", s.cap_offshore_mw / kMwPerGw}};
    item["phi_mw"] = s.phi_p ? nlohmann::json(*s.phi_p) : nlohmann::json(nullptr);
    list.push_back(std::move(item));
  }
  return nlohmann::json{{"scenarios", list}}.dump(2) + "\n";
}

}  // namespace shiftrisk
