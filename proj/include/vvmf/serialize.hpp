#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vvmf/decompose.hpp"
#include "vvmf/mlde.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/repclass.hpp"
#include "vvmf/valuation.hpp"

namespace vvmf {

// All rationals serialize as exact "num/den" strings; no floating point.

nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ReprParams& p);
ReprParams repr_params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VvmfForm& f);
VvmfForm vvmf_form_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Decomposition& d);

// CSV columns: n, numerator, denominator, nu_actual, nu_predicted, match
std::string to_csv(const ValuationTable& t, const QSeries& f);
nlohmann::json to_json(const ValuationTable& t);

nlohmann::json to_json(const UnboundedReport& r);

}  // namespace vvmf
