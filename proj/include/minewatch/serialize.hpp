#pragma once

#include "json.hpp"
#include "minewatch/detector.hpp"
#include "minewatch/evaluate.hpp"

namespace minewatch {

nlohmann::ordered_json stats_to_json(const WindowStats& st);

/// `{"event":"alert","pid":...,"name":...,"first_t":...,"last_t":...,
///   "reasons":[...],"stats":{...}}`
nlohmann::ordered_json alert_to_json(const Alert& a);

nlohmann::ordered_json report_to_json(const EvalReport& r);

}  // namespace minewatch
