#pragma once

#include "wps/classify.hpp"

#include <json.hpp>

#include <string>

namespace wps {

// Enum tags serialize as lowercase snake_case strings; Rationals as
// "num/den"; big integers as decimal strings; PiSurd as
// {"coeff","radicand","approx"}.

std::string to_string(EinsteinTag t);
std::string to_string(ConformalRegime r);
std::string to_string(CurvatureRegime r);
std::string to_string(Location l);
std::string to_string(Ordering o);

EinsteinTag einstein_tag_from_string(const std::string& s);
ConformalRegime conformal_regime_from_string(const std::string& s);
CurvatureRegime curvature_regime_from_string(const std::string& s);
Location location_from_string(const std::string& s);

// Display form for tables: "4/1*pi*sqrt(12/5)".
std::string pi_surd_to_string(const PiSurd& x);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const PiSurd& x);
nlohmann::json to_json(const SingularPoint& sp);
nlohmann::json to_json(const TopologyReport& t);
nlohmann::json to_json(const ScalarCurvatureProfile& s);
nlohmann::json to_json(const YamabeReport& y);
nlohmann::json to_json(const Classification& c);

Rational rational_from_json(const nlohmann::json& j);
PiSurd pi_surd_from_json(const nlohmann::json& j);
TopologyReport topology_report_from_json(const nlohmann::json& j);
ScalarCurvatureProfile scalar_profile_from_json(const nlohmann::json& j);
YamabeReport yamabe_report_from_json(const nlohmann::json& j);
Classification classification_from_json(const nlohmann::json& j);

bool operator==(const TopologyReport& a, const TopologyReport& b);
bool operator==(const ScalarCurvatureProfile& a, const ScalarCurvatureProfile& b);
bool operator==(const YamabeReport& a, const YamabeReport& b);
bool operator==(const Classification& a, const Classification& b);

// Multi-line human-readable rendering of a full classification.
std::string classification_to_text(const Classification& c);

}  // namespace wps
