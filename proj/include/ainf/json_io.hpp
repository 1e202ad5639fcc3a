#pragma once

#include "ainf/cvector.hpp"
#include "ainf/homindex.hpp"
#include "ainf/triangulation.hpp"

#include <json.hpp>

#include <string>

namespace ainf {

using json = nlohmann::ordered_json;

// messages start with the JSON pointer of the offending value
json read_json_file(const std::string& path);

ZModel model_from_json(const json& j, const std::string& at = "");
Point point_from_json(const ZModel& z, const json& j, const std::string& at);
Triangulation triangulation_from_json(const json& j);

// "5", "1:-3", "L0"
Point point_from_token(const ZModel& z, const std::string& tok);

json to_json(const ZModel& z);
json to_json(const ZModel& z, const Point& p);
json to_json(const ZModel& z, const Arc& a);
json to_json(const Triangulation& t);
json to_json(const KVector& v);
json to_json(const ZModel& z, const CoVector& c);
json to_json(const ValidationReport& r);

KVector kvector_from_json(const ZModel& z, const json& j, const std::string& at = "");
CoVector covector_from_json(const ZModel& z, const json& j, const std::string& at = "");

}  // namespace ainf
