#include "wps/survey.hpp"

#include <sstream>

namespace wps {

using nlohmann::json;

SurveyRecord make_survey_record(const Classification& c) {
    SurveyRecord rec;
    rec.r = c.weights.r();
    rec.q = c.weights.q();
    rec.p = c.weights.p();
    rec.einstein_tag = to_string(c.einstein.tag);
    rec.regime_tag = to_string(c.conformal_regime);
    rec.ht_deficit = c.topology.ht_deficit;
    rec.yamabe_exact = c.yamabe.exact;
    rec.yamabe_lower = c.yamabe.lower;
    rec.yamabe_upper = c.yamabe.reported_upper;
    rec.effective_exact = c.yamabe.effective_exact;
    rec.effective_linear = c.yamabe.effective_linear;
    return rec;
}

namespace {

bool known_filter(const std::string& f) {
    static const char* names[] = {
        "kaehler_einstein_exists", "einstein_exists", "obstructed", "unknown",
        "positive_einstein", "ricci_flat_punctured", "negative_pieces"};
    for (const char* n : names) {
        if (f == n) return true;
    }
    return false;
}

}  // namespace

std::vector<SurveyRecord> run_survey(const Int& max_p,
                                     const std::optional<std::string>& filter) {
    if (filter && !known_filter(*filter)) {
        throw Error("unknown filter \"" + *filter + "\"");
    }
    std::vector<SurveyRecord> recs;
    for_each_valid_weights(max_p, [&](const Weights& w) {
        SurveyRecord rec = make_survey_record(classify(w));
        if (!filter || rec.einstein_tag == *filter || rec.regime_tag == *filter) {
            recs.push_back(std::move(rec));
        }
    });
    return recs;
}

std::map<std::string, std::size_t> survey_histogram(const std::vector<SurveyRecord>& recs) {
    std::map<std::string, std::size_t> hist;
    for (const auto& r : recs) ++hist[r.einstein_tag];
    return hist;
}

json to_json(const SurveyRecord& rec) {
    json j{{"r", rec.r.str()},
           {"q", rec.q.str()},
           {"p", rec.p.str()},
           {"einstein", rec.einstein_tag},
           {"regime", rec.regime_tag},
           {"ht_deficit", to_json(rec.ht_deficit)},
           {"yamabe_upper", to_json(rec.yamabe_upper)},
           {"effective_exact", rec.effective_exact},
           {"effective_linear", rec.effective_linear}};
    j["yamabe_exact"] = rec.yamabe_exact ? to_json(*rec.yamabe_exact) : json();
    j["yamabe_lower"] = rec.yamabe_lower ? to_json(*rec.yamabe_lower) : json();
    return j;
}

SurveyRecord survey_record_from_json(const json& j) {
    SurveyRecord rec;
    rec.r = Int(j.at("r").get<std::string>());
    rec.q = Int(j.at("q").get<std::string>());
    rec.p = Int(j.at("p").get<std::string>());
    rec.einstein_tag = j.at("einstein").get<std::string>();
    rec.regime_tag = j.at("regime").get<std::string>();
    rec.ht_deficit = rational_from_json(j.at("ht_deficit"));
    if (!j.at("yamabe_exact").is_null()) {
        rec.yamabe_exact = pi_surd_from_json(j.at("yamabe_exact"));
    }
    if (!j.at("yamabe_lower").is_null()) {
        rec.yamabe_lower = pi_surd_from_json(j.at("yamabe_lower"));
    }
    rec.yamabe_upper = pi_surd_from_json(j.at("yamabe_upper"));
    rec.effective_exact = j.at("effective_exact").get<bool>();
    rec.effective_linear = j.at("effective_linear").get<bool>();
    return rec;
}

bool operator==(const SurveyRecord& a, const SurveyRecord& b) {
    return a.r == b.r && a.q == b.q && a.p == b.p &&
           a.einstein_tag == b.einstein_tag && a.regime_tag == b.regime_tag &&
           a.ht_deficit == b.ht_deficit && a.yamabe_exact == b.yamabe_exact &&
           a.yamabe_lower == b.yamabe_lower && a.yamabe_upper == b.yamabe_upper &&
           a.effective_exact == b.effective_exact &&
           a.effective_linear == b.effective_linear;
}

std::string survey_csv_header() {
    return "r,q,p,einstein,regime,ht_deficit,yamabe_exact,yamabe_lower,"
           "yamabe_upper,effective_exact,effective_linear";
}

std::string survey_csv_row(const SurveyRecord& rec) {
    std::ostringstream out;
    auto surd = [](const std::optional<PiSurd>& x) {
        return x ? pi_surd_to_string(*x) : std::string();
    };
    out << rec.r << "," << rec.q << "," << rec.p << "," << rec.einstein_tag << ","
        << rec.regime_tag << "," << to_fraction_string(rec.ht_deficit) << ","
        << surd(rec.yamabe_exact) << "," << surd(rec.yamabe_lower) << ","
        << pi_surd_to_string(rec.yamabe_upper) << ","
        << (rec.effective_exact ? "true" : "false") << ","
        << (rec.effective_linear ? "true" : "false");
    return out.str();
}

}  // namespace wps
