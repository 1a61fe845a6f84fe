#include "shiftrisk/demand_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json_detail.hpp"
#include "shiftrisk/error.hpp"

namespace shiftrisk {

namespace {

constexpr std::array<const char*, 7> kDayNames{"mon", "tue", "wed", "thu", "fri", "sat", "sun"};

int slot_to_day(int reference_dow, std::size_t slot) {
  int m = static_cast<int>(slot) + 1;
  return m >= reference_dow ? m + 1 : m;
}

std::ptrdiff_t day_to_slot(int reference_dow, int m) {
  if (m == reference_dow) return -1;
  return m < reference_dow ? m - 1 : m - 2;
}

}  // namespace

double CoefficientSet::dow_effect(int m) const {
  const auto slot = day_to_slot(reference_dow, wrap_dow(m));
  return slot < 0 ? 0.0 : omega[static_cast<std::size_t>(slot)];
}

std::array<double, 7> CoefficientSet::dow_effects() const {
  std::array<double, 7> out{};
  for (int m = 1; m <= kDaysPerWeek; ++m) out[m - 1] = dow_effect(m);
  return out;
}

int CoefficientSet::omega_day(std::size_t slot) const { return slot_to_day(reference_dow, slot); }

bool CoefficientSet::knows_winter(int winter_id) const noexcept {
  return !year_effects || winter_id == reference_winter || phi.count(winter_id) > 0;
}

double CoefficientSet::year_effect(int winter_id) const {
  if (!year_effects || winter_id == reference_winter) return 0.0;
  auto it = phi.find(winter_id);
  if (it == phi.end()) {
    throw ContractError("winter " + std::to_string(winter_id) + " has no fitted year effect (reference winter is " +
                        std::to_string(reference_winter) + ")");
  }
  return it->second;
}

CoefficientSet reference_coefficients() {
  CoefficientSet c;
  c.alpha = 46415.16;
  c.lambda1 = -562.47;
  c.beta1 = 39.39;
  c.beta2 = -0.31;
  c.gamma1 = 125.96;
  c.omega = {-3301.58, 1664.20, 1720.86, 1576.71, 1436.08, -3616.42};
  c.phi = {{2009, 6712.74}, {2010, 6904.77}, {2011, 5798.39}, {2012, 5325.14}, {2013, 4601.24},
           {2014, 4662.72}, {2015, 3530.06}, {2016, 2647.77}, {2017, 1839.40}, {2018, 707.50}};
  c.reference_dow = kSunday;
  c.reference_winter = 2019;
  return c;
}

CoefficientSet reference_standard_errors() {
  CoefficientSet c;
  c.alpha = 125.55;
  c.lambda1 = 8.20;
  c.beta1 = 2.18;
  c.beta2 = 0.01;
  c.gamma1 = 9.51;
  c.omega = {68.31, 68.35, 68.31, 68.30, 68.30, 68.22};
  c.phi = {{2009, 86.97}, {2010, 87.03}, {2011, 85.75}, {2012, 87.35}, {2013, 85.64},
           {2014, 85.80}, {2015, 85.55}, {2016, 86.42}, {2017, 86.44}, {2018, 85.72}};
  c.reference_dow = kSunday;
  c.reference_winter = 2019;
  return c;
}

double regression_formula(const CoefficientSet& c, double te, int dsn, int dow, double ws, int winter_id) {
  const double d = static_cast<double>(dsn);
  return c.alpha + c.lambda1 * te + c.beta1 * d + c.beta2 * d * d + c.dow_effect(dow) + c.gamma1 * ws +
         c.year_effect(winter_id);
}

DesignMatrix build_design_matrix(std::span<const WinterDataset> data, const DesignOptions& options) {
  if (data.empty()) throw ContractError("build_design_matrix: no winters supplied");
  if (options.reference_dow < 1 || options.reference_dow > kDaysPerWeek) {
    throw ContractError("build_design_matrix: reference day must be in 1..7");
  }
  DesignMatrix dm;
  dm.reference_dow = options.reference_dow;
  dm.year_effects = options.year_effects;
  for (const auto& w : data) {
    w.validate();
    dm.winters.push_back(w.winter_id());
  }
  std::vector<int> sorted = dm.winters;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractError("build_design_matrix: duplicate winter");
  }
  if (options.year_effects) {
    if (data.size() < 2) {
      throw ContractError("build_design_matrix: year effects need at least two winters (a reference plus one more)");
    }
    dm.reference_winter = options.reference_winter.value_or(sorted.back());
    if (!std::binary_search(sorted.begin(), sorted.end(), dm.reference_winter)) {
      throw ContractError("build_design_matrix: reference winter " + std::to_string(dm.reference_winter) +
                          " is not in the data");
    }
  }

  dm.column_names = {"intercept", "te", "dsn", "dsn2", "ws"};
  for (std::size_t slot = 0; slot < 6; ++slot) {
    dm.column_names.push_back(std::string("dow_") + kDayNames[slot_to_day(dm.reference_dow, slot) - 1]);
  }
  std::vector<int> year_columns;
  if (options.year_effects) {
    for (int w : sorted) {
      if (w != dm.reference_winter) {
        year_columns.push_back(w);
        dm.column_names.push_back("year_" + std::to_string(w));
      }
    }
  }

  std::size_t n_rows = 0;
  for (const auto& w : data) n_rows += w.days();
  const auto p = static_cast<Eigen::Index>(dm.column_names.size());
  dm.x = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_rows), p);
  dm.y.resize(static_cast<Eigen::Index>(n_rows));
  dm.rows.reserve(n_rows);

  Eigen::Index r = 0;
  for (const auto& w : data) {
    const auto year_it = std::find(year_columns.begin(), year_columns.end(), w.winter_id());
    for (std::size_t t = 0; t < w.days(); ++t, ++r) {
      const double te = w.te_at_peak(static_cast<long>(t));
      const double ws = w.ws_at_peak(static_cast<long>(t));
      const double dsn = static_cast<double>(w.calendar.dsn[t]);
      if (!std::isfinite(te) || !std::isfinite(ws)) {
        throw ValidationError("build_design_matrix: non-finite covariate in winter " + std::to_string(w.winter_id()));
      }
      dm.x(r, 0) = 1.0;
      dm.x(r, 1) = te;
      dm.x(r, 2) = dsn;
      dm.x(r, 3) = dsn * dsn;
      dm.x(r, 4) = ws;
      const auto slot = day_to_slot(dm.reference_dow, w.calendar.dow[t]);
      if (slot >= 0) dm.x(r, 5 + slot) = 1.0;
      if (year_it != year_columns.end()) dm.x(r, 11 + (year_it - year_columns.begin())) = 1.0;
      dm.y(r) = w.observed_peak_demand[t];
      dm.rows.push_back({w.winter_id(), t});
    }
  }
  return dm;
}

namespace {

std::string find_collinear_pair(const Eigen::MatrixXd& x, std::span<const std::string> names) {
  auto name = [&](Eigen::Index i) {
    return static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)] : "column " + std::to_string(i);
  };
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    const double ni = x.col(i).norm();
    if (ni == 0.0) return name(i) + " (all zeros)";
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) {
      const double nj = x.col(j).norm();
      if (nj == 0.0) continue;
      if (std::abs(x.col(i).dot(x.col(j))) >= (1.0 - 1e-12) * ni * nj) return name(i) + " and " + name(j);
    }
  }
  return "";
}

}  // namespace

LeastSquaresSolution solve_least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                         std::span<const std::string> column_names) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  if (n <= p) {
    throw ContractError("least squares: need more rows (" + std::to_string(n) + ") than columns (" +
                        std::to_string(p) + ")");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  qr.setThreshold(1e-10);
  if (qr.rank() < p) {
    const std::string pair = find_collinear_pair(x, column_names);
    if (!pair.empty()) throw SingularityError("design matrix is rank deficient: collinear columns " + pair);
    const Eigen::Index pivot = qr.colsPermutation().indices()(p - 1);
    throw SingularityError("design matrix is rank deficient: linear dependence involving " +
                           (static_cast<std::size_t>(pivot) < column_names.size()
                                ? column_names[static_cast<std::size_t>(pivot)]
                                : std::to_string(pivot)));
  }
  LeastSquaresSolution s;
  s.beta = qr.solve(y);
  s.residuals = y - x * s.beta;
  s.rss = s.residuals.squaredNorm();
  s.tss = (y.array() - y.mean()).matrix().squaredNorm();
  s.r2 = s.tss > 0.0 ? 1.0 - s.rss / s.tss : 1.0;
  const double dof = static_cast<double>(n - p);
  s.adjusted_r2 = s.tss > 0.0 ? 1.0 - (s.rss / dof) / (s.tss / static_cast<double>(n - 1)) : 1.0;

  // cov(beta) = s^2 (X'X)^-1 = s^2 P R^-1 R^-T P'
  const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv =
      r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::VectorXd perm_var = (r_inv * r_inv.transpose()).diagonal();
  const double sigma2 = s.rss / dof;
  s.standard_errors.resize(p);
  const auto& perm = qr.colsPermutation().indices();
  for (Eigen::Index k = 0; k < p; ++k) s.standard_errors(perm(k)) = std::sqrt(sigma2 * perm_var(k));
  return s;
}

namespace {

CoefficientSet unpack(const Eigen::VectorXd& v, const DesignMatrix& dm) {
  CoefficientSet c;
  c.reference_dow = dm.reference_dow;
  c.reference_winter = dm.reference_winter;
  c.year_effects = dm.year_effects;
  c.alpha = v(0);
  c.lambda1 = v(1);
  c.beta1 = v(2);
  c.beta2 = v(3);
  c.gamma1 = v(4);
  for (std::size_t k = 0; k < 6; ++k) c.omega[k] = v(5 + static_cast<Eigen::Index>(k));
  Eigen::Index col = 11;
  if (dm.year_effects) {
    std::vector<int> sorted = dm.winters;
    std::sort(sorted.begin(), sorted.end());
    for (int w : sorted) {
      if (w != dm.reference_winter) c.phi[w] = v(col++);
    }
  }
  return c;
}

}  // namespace

Eigen::VectorXd coefficient_vector(const CoefficientSet& c, const DesignMatrix& dm) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(dm.column_names.size()));
  v(0) = c.alpha;
  v(1) = c.lambda1;
  v(2) = c.beta1;
  v(3) = c.beta2;
  v(4) = c.gamma1;
  for (std::size_t k = 0; k < 6; ++k) v(5 + static_cast<Eigen::Index>(k)) = c.dow_effect(slot_to_day(dm.reference_dow, k));
  Eigen::Index col = 11;
  if (dm.year_effects) {
    std::vector<int> sorted = dm.winters;
    std::sort(sorted.begin(), sorted.end());
    for (int w : sorted) {
      if (w != dm.reference_winter) v(col++) = c.year_effect(w);
    }
  }
  return v;
}

RegressionFit fit_ols(const DesignMatrix& dm) {
  const LeastSquaresSolution s = solve_least_squares(dm.x, dm.y, dm.column_names);
  RegressionFit fit;
  fit.coefficients = unpack(s.beta, dm);
  fit.standard_errors = unpack(s.standard_errors, dm);
  fit.r2 = s.r2;
  fit.adjusted_r2 = s.adjusted_r2;
  fit.n_obs = static_cast<std::size_t>(dm.x.rows());
  for (std::size_t r = 0; r < dm.rows.size(); ++r) {
    fit.residuals[dm.rows[r].winter_id].push_back(s.residuals(static_cast<Eigen::Index>(r)));
  }
  const double n = static_cast<double>(fit.n_obs);
  const double mean = s.residuals.mean();
  fit.residual_sd = std::sqrt((s.residuals.array() - mean).square().sum() / (n - 1.0));
  double num = 0.0;
  double den = 0.0;
  for (const auto& [w, e] : fit.residuals) {
    for (std::size_t t = 0; t < e.size(); ++t) {
      den += e[t] * e[t];
      if (t + 1 < e.size()) num += e[t] * e[t + 1];
    }
  }
  fit.lag1_autocorr = den > 0.0 ? num / den : 0.0;
  return fit;
}

double RegressionFit::residual(int winter_id, std::size_t day) const {
  auto it = residuals.find(winter_id);
  if (it == residuals.end() || day >= it->second.size()) {
    throw ContractError("no residual for winter " + std::to_string(winter_id) + " day " + std::to_string(day));
  }
  return it->second[day];
}

std::size_t RegressionFit::n_coefficients() const noexcept { return 11 + coefficients.phi.size(); }

std::vector<double> central_estimate(const CoefficientSet& c, const WinterDataset& data) {
  if (!c.knows_winter(data.winter_id())) {
    throw ContractError("central_estimate: unknown winter " + std::to_string(data.winter_id()));
  }
  std::vector<double> out(data.days());
  for (std::size_t t = 0; t < data.days(); ++t) {
    const long day = static_cast<long>(t);
    out[t] = regression_formula(c, data.te_at_peak(day), data.calendar.dsn[t], data.calendar.dow[t],
                                data.ws_at_peak(day), data.winter_id());
  }
  return out;
}

std::vector<double> central_estimate(const RegressionFit& fit, const WinterDataset& data) {
  return central_estimate(fit.coefficients, data);
}

namespace detail {

nlohmann::json coefficients_value(const CoefficientSet& c) {
  nlohmann::json omega = nlohmann::json::object();
  for (std::size_t k = 0; k < 6; ++k) omega[kDayNames[c.omega_day(k) - 1]] = c.omega[k];
  nlohmann::json phi = nlohmann::json::object();
  for (const auto& [w, v] : c.phi) phi[std::to_string(w)] = v;
  return {{"alpha", c.alpha},
          {"lambda1", c.lambda1},
          {"beta1", c.beta1},
          {"beta2", c.beta2},
          {"gamma1", c.gamma1},
          {"omega", omega},
          {"phi", phi},
          {"reference_dow", kDayNames[c.reference_dow - 1]},
          {"reference_winter", c.reference_winter},
          {"year_effects", c.year_effects}};
}

CoefficientSet coefficients_from_value(const nlohmann::json& j) {
  CoefficientSet c;
  c.alpha = j.at("alpha").get<double>();
  c.lambda1 = j.at("lambda1").get<double>();
  c.beta1 = j.at("beta1").get<double>();
  c.beta2 = j.at("beta2").get<double>();
  c.gamma1 = j.at("gamma1").get<double>();
  const std::string ref = j.value("reference_dow", std::string("sun"));
  const auto ref_it = std::find(kDayNames.begin(), kDayNames.end(), ref);
  if (ref_it == kDayNames.end()) throw std::invalid_argument("unknown reference_dow '" + ref + "'");
  c.reference_dow = static_cast<int>(ref_it - kDayNames.begin()) + 1;
  c.reference_winter = j.value("reference_winter", 0);
  c.year_effects = j.value("year_effects", true);
  const auto& omega = j.at("omega");
  if (omega.is_array()) {
    if (omega.size() != 6) throw std::invalid_argument("omega must have exactly 6 entries");
    for (std::size_t k = 0; k < 6; ++k) c.omega[k] = omega[k].get<double>();
  } else {
    if (omega.size() != 6) throw std::invalid_argument("omega must have exactly 6 entries");
    for (std::size_t k = 0; k < 6; ++k) c.omega[k] = omega.at(kDayNames[c.omega_day(k) - 1]).get<double>();
  }
  const nlohmann::json phi = j.value("phi", nlohmann::json::object());
  for (const auto& [key, value] : phi.items()) {
    c.phi[std::stoi(key)] = value.get<double>();
  }
  if (c.phi.count(c.reference_winter)) throw std::invalid_argument("reference winter must not carry a year effect");
  return c;
}

}  // namespace detail

std::string coefficients_to_json(const CoefficientSet& c) { return detail::coefficients_value(c).dump(2) + "\n"; }

CoefficientSet coefficients_from_json(std::string_view text) {
  try {
    return detail::coefficients_from_value(nlohmann::json::parse(text));
  } catch (const std::exception& e) {
    throw InputError(std::string("coefficients: ") + e.what());
  }
}

std::string fit_to_json(const RegressionFit& fit) {
  nlohmann::json residuals = nlohmann::json::array();
  for (const auto& [w, e] : fit.residuals) {
    residuals.push_back({{"winter", w}, {"start", format_date(winter_start(w))}, {"values", e}});
  }
  nlohmann::json doc{{"model", "daily_peak_ols"},
                     {"n_coefficients", fit.n_coefficients()},
                     {"coefficients", detail::coefficients_value(fit.coefficients)},
                     {"standard_errors", detail::coefficients_value(fit.standard_errors)},
                     {"diagnostics",
                      {{"n_obs", fit.n_obs},
                       {"residual_sd", fit.residual_sd},
                       {"r2", fit.r2},
                       {"adjusted_r2", fit.adjusted_r2},
                       {"lag1_autocorr", fit.lag1_autocorr}}},
                     {"residuals", residuals}};
  return doc.dump(2) + "\n";
}

RegressionFit fit_from_json(std::string_view text, std::string_view source) {
  try {
    const auto doc = nlohmann::json::parse(text);
    RegressionFit fit;
    fit.coefficients = detail::coefficients_from_value(doc.at("coefficients"));
    fit.standard_errors = detail::coefficients_from_value(doc.at("standard_errors"));
    const auto& diag = doc.at("diagnostics");
    fit.n_obs = diag.at("n_obs").get<std::size_t>();
    fit.residual_sd = diag.at("residual_sd").get<double>();
    fit.r2 = diag.at("r2").get<double>();
    fit.adjusted_r2 = diag.at("adjusted_r2").get<double>();
    fit.lag1_autocorr = diag.at("lag1_autocorr").get<double>();
    for (const auto& item : doc.at("residuals")) {
      fit.residuals[item.at("winter").get<int>()] = item.at("values").get<std::vector<double>>();
    }
    return fit;
  } catch (const std::exception& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

}  // namespace shiftrisk
