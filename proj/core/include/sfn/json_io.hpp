#ifndef SFN_JSON_IO_HPP
#define SFN_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "sfn/aaafit.hpp"
#include "sfn/curves.hpp"
#include "sfn/field.hpp"
#include "sfn/ratcore.hpp"
#include "sfn/schwarz.hpp"

namespace sfn {

// Complex numbers serialize as [re, im]; round-trips are bit-faithful
// for finite doubles.

nlohmann::json to_json(const BarycentricRational& r);
BarycentricRational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SampleSet& s);
SampleSet samples_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FitConfig& c);
FitConfig fit_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FitReport& r);
FitReport fit_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SchwarzApprox& s);
SchwarzApprox schwarz_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FieldGrid& g);
FieldGrid field_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace sfn

#endif
