#pragma once

#include "wps/classify.hpp"
#include "wps/serialize.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wps {

struct SurveyRecord {
    Int r, q, p;
    std::string einstein_tag;
    std::string regime_tag;  // conformal regime
    Rational ht_deficit;
    std::optional<PiSurd> yamabe_exact;
    std::optional<PiSurd> yamabe_lower;
    PiSurd yamabe_upper;  // the reported (minimum) upper bound
    bool effective_exact = false;
    bool effective_linear = false;
};

SurveyRecord make_survey_record(const Classification& c);

// Filter names are EinsteinStatus or ConformalRegime tags.
// Throws Error on an unknown filter name.
std::vector<SurveyRecord> run_survey(const Int& max_p,
                                     const std::optional<std::string>& filter = {});

// EinsteinStatus tag histogram over all records (pre-filter counts are not
// kept; the histogram describes what was emitted).
std::map<std::string, std::size_t> survey_histogram(const std::vector<SurveyRecord>& recs);

nlohmann::json to_json(const SurveyRecord& rec);
SurveyRecord survey_record_from_json(const nlohmann::json& j);
bool operator==(const SurveyRecord& a, const SurveyRecord& b);

// Fixed CSV column order; golden files pin it.
std::string survey_csv_header();
std::string survey_csv_row(const SurveyRecord& rec);

}  // namespace wps
