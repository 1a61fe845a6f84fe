#pragma once

#include "json.hpp"
#include "shiftrisk/demand_model.hpp"

namespace shiftrisk::detail {

nlohmann::json coefficients_value(const CoefficientSet& c);
CoefficientSet coefficients_from_value(const nlohmann::json& j);

}  // namespace shiftrisk::detail
