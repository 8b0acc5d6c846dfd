#include "wps/serialize.hpp"

#include <sstream>

namespace wps {

using nlohmann::json;

std::string to_string(EinsteinTag t) {
    switch (t) {
        case EinsteinTag::KaehlerEinsteinExists: return "kaehler_einstein_exists";
        case EinsteinTag::EinsteinExists: return "einstein_exists";
        case EinsteinTag::Obstructed: return "obstructed";
        case EinsteinTag::Unknown: return "unknown";
    }
    throw Error("bad EinsteinTag");
}

std::string to_string(ConformalRegime r) {
    switch (r) {
        case ConformalRegime::PositiveEinstein: return "positive_einstein";
        case ConformalRegime::RicciFlatPunctured: return "ricci_flat_punctured";
        case ConformalRegime::NegativePieces: return "negative_pieces";
    }
    throw Error("bad ConformalRegime");
}

std::string to_string(CurvatureRegime r) {
    switch (r) {
        case CurvatureRegime::PositiveEverywhere: return "positive_everywhere";
        case CurvatureRegime::NonnegVanishesAtPoint: return "nonneg_vanishes_at_point";
        case CurvatureRegime::SignChanging: return "sign_changing";
    }
    throw Error("bad CurvatureRegime");
}

std::string to_string(Location l) {
    switch (l) {
        case Location::P100: return "p100";
        case Location::P010: return "p010";
        case Location::P001: return "p001";
    }
    throw Error("bad Location");
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
    }
    throw Error("bad Ordering");
}

EinsteinTag einstein_tag_from_string(const std::string& s) {
    if (s == "kaehler_einstein_exists") return EinsteinTag::KaehlerEinsteinExists;
    if (s == "einstein_exists") return EinsteinTag::EinsteinExists;
    if (s == "obstructed") return EinsteinTag::Obstructed;
    if (s == "unknown") return EinsteinTag::Unknown;
    throw Error("unknown Einstein tag \"" + s + "\"");
}

ConformalRegime conformal_regime_from_string(const std::string& s) {
    if (s == "positive_einstein") return ConformalRegime::PositiveEinstein;
    if (s == "ricci_flat_punctured") return ConformalRegime::RicciFlatPunctured;
    if (s == "negative_pieces") return ConformalRegime::NegativePieces;
    throw Error("unknown conformal regime \"" + s + "\"");
}

CurvatureRegime curvature_regime_from_string(const std::string& s) {
    if (s == "positive_everywhere") return CurvatureRegime::PositiveEverywhere;
    if (s == "nonneg_vanishes_at_point") return CurvatureRegime::NonnegVanishesAtPoint;
    if (s == "sign_changing") return CurvatureRegime::SignChanging;
    throw Error("unknown curvature regime \"" + s + "\"");
}

Location location_from_string(const std::string& s) {
    if (s == "p100") return Location::P100;
    if (s == "p010") return Location::P010;
    if (s == "p001") return Location::P001;
    throw Error("unknown location \"" + s + "\"");
}

std::string pi_surd_to_string(const PiSurd& x) {
    return to_fraction_string(x.coeff) + "*pi*sqrt(" +
           to_fraction_string(x.radicand) + ")";
}

json to_json(const Rational& r) { return to_fraction_string(r); }

json to_json(const PiSurd& x) {
    return json{{"coeff", to_fraction_string(x.coeff)},
                {"radicand", to_fraction_string(x.radicand)},
                {"approx", pi_surd_to_float(x)}};
}

json to_json(const SingularPoint& sp) {
    return json{{"location", to_string(sp.location)},
                {"action", json{{"a", sp.action.a.str()}, {"n", sp.action.n.str()}}},
                {"order", sp.order.str()},
                {"eta", to_fraction_string(sp.eta)},
                {"euler_contribution", to_fraction_string(sp.euler_contribution)}};
}

json to_json(const TopologyReport& t) {
    return json{{"euler_char", t.euler_char},
                {"signature", t.signature},
                {"euler_curvature_term", to_json(t.euler_curvature_term)},
                {"euler_singular_term", to_json(t.euler_singular_term)},
                {"signature_curvature_term", to_json(t.signature_curvature_term)},
                {"signature_eta_term", to_json(t.signature_eta_term)},
                {"c1_squared", to_json(t.c1_squared)},
                {"ht_deficit", to_json(t.ht_deficit)}};
}

json to_json(const ScalarCurvatureProfile& s) {
    json j{{"a1", s.a1.str()},
           {"a2", s.a2.str()},
           {"a3", s.a3.str()},
           {"min_R", s.min_R.str()},
           {"max_R", s.max_R.str()},
           {"regime", to_string(s.regime)},
           {"volume_coeff", to_json(s.volume_coeff)}};
    j["zero_location"] = s.zero_location ? json(to_string(*s.zero_location)) : json();
    return j;
}

json to_json(const YamabeReport& y) {
    json j{{"elementary", to_json(y.elementary)},
           {"upper", to_json(y.upper)},
           {"upper_strict", y.upper_strict},
           {"reported_upper", to_json(y.reported_upper)},
           {"lower_strict", y.lower_strict},
           {"lower_attained_by_bk_class", y.lower_attained_by_bk_class},
           {"effective_exact", y.effective_exact},
           {"effective_linear", y.effective_linear}};
    j["lower"] = y.lower ? to_json(*y.lower) : json();
    j["exact"] = y.exact ? to_json(*y.exact) : json();
    return j;
}

json to_json(const Classification& c) {
    return json{{"weights", json{{"r", c.weights.r().str()},
                                 {"q", c.weights.q().str()},
                                 {"p", c.weights.p().str()}}},
                {"einstein", to_string(c.einstein.tag)},
                {"einstein_note", c.einstein.note},
                {"kaehler_einstein", c.kaehler_einstein},
                {"conformal_regime", to_string(c.conformal_regime)},
                {"ht_deficit", to_json(c.topology.ht_deficit)},
                {"topology", to_json(c.topology)},
                {"scalar_profile", to_json(c.scalar_profile)},
                {"yamabe", to_json(c.yamabe)}};
}

Rational rational_from_json(const json& j) {
    return rational_from_string(j.get<std::string>());
}

PiSurd pi_surd_from_json(const json& j) {
    return PiSurd{rational_from_json(j.at("coeff")),
                  rational_from_json(j.at("radicand"))};
}

TopologyReport topology_report_from_json(const json& j) {
    TopologyReport t;
    t.euler_char = j.at("euler_char").get<int>();
    t.signature = j.at("signature").get<int>();
    t.euler_curvature_term = rational_from_json(j.at("euler_curvature_term"));
    t.euler_singular_term = rational_from_json(j.at("euler_singular_term"));
    t.signature_curvature_term = rational_from_json(j.at("signature_curvature_term"));
    t.signature_eta_term = rational_from_json(j.at("signature_eta_term"));
    t.c1_squared = rational_from_json(j.at("c1_squared"));
    t.ht_deficit = rational_from_json(j.at("ht_deficit"));
    return t;
}

ScalarCurvatureProfile scalar_profile_from_json(const json& j) {
    ScalarCurvatureProfile s;
    s.a1 = Int(j.at("a1").get<std::string>());
    s.a2 = Int(j.at("a2").get<std::string>());
    s.a3 = Int(j.at("a3").get<std::string>());
    s.min_R = Int(j.at("min_R").get<std::string>());
    s.max_R = Int(j.at("max_R").get<std::string>());
    s.regime = curvature_regime_from_string(j.at("regime").get<std::string>());
    s.volume_coeff = rational_from_json(j.at("volume_coeff"));
    if (!j.at("zero_location").is_null()) {
        s.zero_location = location_from_string(j.at("zero_location").get<std::string>());
    }
    return s;
}

YamabeReport yamabe_report_from_json(const json& j) {
    YamabeReport y;
    y.elementary = pi_surd_from_json(j.at("elementary"));
    y.upper = pi_surd_from_json(j.at("upper"));
    y.upper_strict = j.at("upper_strict").get<bool>();
    y.reported_upper = pi_surd_from_json(j.at("reported_upper"));
    if (!j.at("lower").is_null()) y.lower = pi_surd_from_json(j.at("lower"));
    y.lower_strict = j.at("lower_strict").get<bool>();
    y.lower_attained_by_bk_class = j.at("lower_attained_by_bk_class").get<bool>();
    if (!j.at("exact").is_null()) y.exact = pi_surd_from_json(j.at("exact"));
    y.effective_exact = j.at("effective_exact").get<bool>();
    y.effective_linear = j.at("effective_linear").get<bool>();
    return y;
}

Classification classification_from_json(const json& j) {
    const json& w = j.at("weights");
    Classification c{validate_weights(Int(w.at("r").get<std::string>()),
                                      Int(w.at("q").get<std::string>()),
                                      Int(w.at("p").get<std::string>())),
                     topology_report_from_json(j.at("topology")),
                     scalar_profile_from_json(j.at("scalar_profile")),
                     conformal_regime_from_string(j.at("conformal_regime").get<std::string>()),
                     j.at("kaehler_einstein").get<bool>(),
                     EinsteinStatus{einstein_tag_from_string(j.at("einstein").get<std::string>()),
                                    j.at("einstein_note").get<std::string>()},
                     yamabe_report_from_json(j.at("yamabe"))};
    return c;
}

bool operator==(const TopologyReport& a, const TopologyReport& b) {
    return a.euler_char == b.euler_char && a.signature == b.signature &&
           a.euler_curvature_term == b.euler_curvature_term &&
           a.euler_singular_term == b.euler_singular_term &&
           a.signature_curvature_term == b.signature_curvature_term &&
           a.signature_eta_term == b.signature_eta_term &&
           a.c1_squared == b.c1_squared && a.ht_deficit == b.ht_deficit;
}

bool operator==(const ScalarCurvatureProfile& a, const ScalarCurvatureProfile& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.min_R == b.min_R &&
           a.max_R == b.max_R && a.regime == b.regime &&
           a.volume_coeff == b.volume_coeff && a.zero_location == b.zero_location;
}

bool operator==(const YamabeReport& a, const YamabeReport& b) {
    return a.elementary == b.elementary && a.upper == b.upper &&
           a.upper_strict == b.upper_strict && a.reported_upper == b.reported_upper &&
           a.lower == b.lower && a.lower_strict == b.lower_strict &&
           a.lower_attained_by_bk_class == b.lower_attained_by_bk_class &&
           a.exact == b.exact && a.effective_exact == b.effective_exact &&
           a.effective_linear == b.effective_linear;
}

bool operator==(const Classification& a, const Classification& b) {
    return a.weights == b.weights && a.topology == b.topology &&
           a.scalar_profile == b.scalar_profile &&
           a.conformal_regime == b.conformal_regime &&
           a.kaehler_einstein == b.kaehler_einstein &&
           a.einstein.tag == b.einstein.tag && a.einstein.note == b.einstein.note &&
           a.yamabe == b.yamabe;
}

std::string classification_to_text(const Classification& c) {
    std::ostringstream out;
    const auto& w = c.weights;
    out << "CP^2_(" << w.r() << "," << w.q() << "," << w.p() << ")\n";
    out << "  einstein:         " << to_string(c.einstein.tag) << "  ["
        << c.einstein.note << "]\n";
    out << "  kaehler_einstein: " << (c.kaehler_einstein ? "yes" : "no") << "\n";
    out << "  conformal regime: " << to_string(c.conformal_regime) << "\n";
    out << "  topology: chi = " << c.topology.euler_char
        << " = " << to_fraction_string(c.topology.euler_curvature_term)
        << " (curvature) + " << to_fraction_string(c.topology.euler_singular_term)
        << " (singular)\n";
    out << "            tau = " << c.topology.signature
        << ", curvature term " << to_fraction_string(c.topology.signature_curvature_term)
        << ", eta term " << to_fraction_string(c.topology.signature_eta_term) << "\n";
    out << "            c1^2 = " << to_fraction_string(c.topology.c1_squared)
        << ", Hitchin-Thorpe deficit = " << to_fraction_string(c.topology.ht_deficit)
        << "\n";
    out << "  singular points:";
    auto pts = singular_points(w);
    if (pts.empty()) {
        out << " none\n";
    } else {
        out << "\n";
        for (const auto& sp : pts) {
            out << "    " << to_string(sp.location) << ": type ("
                << sp.action.a << "," << sp.action.n << ")-action, eta = "
                << to_fraction_string(sp.eta) << "\n";
        }
    }
    const auto& s = c.scalar_profile;
    out << "  scalar curvature: R_g coefficients (" << s.a1 << ", " << s.a2 << ", "
        << s.a3 << "), regime " << to_string(s.regime)
        << ", Vol = " << to_fraction_string(s.volume_coeff) << "*pi^2\n";
    const auto& y = c.yamabe;
    out << "  yamabe:\n";
    out << "    elementary upper: " << pi_surd_to_string(y.elementary) << " ~ "
        << pi_surd_to_float(y.elementary) << "\n";
    out << "    bk-energy upper:  " << pi_surd_to_string(y.upper) << " ~ "
        << pi_surd_to_float(y.upper) << (y.upper_strict ? " (strict)" : "") << "\n";
    out << "    reported upper:   " << pi_surd_to_string(y.reported_upper) << " ~ "
        << pi_surd_to_float(y.reported_upper) << "\n";
    if (y.lower) {
        out << "    lower:            " << pi_surd_to_string(*y.lower) << " ~ "
            << pi_surd_to_float(*y.lower) << (y.lower_strict ? " (strict)" : "")
            << (y.lower_attained_by_bk_class ? " (attained in BK class)" : "") << "\n";
    } else {
        out << "    lower:            none (deficit <= 0)\n";
    }
    if (y.exact) {
        out << "    exact value:      " << pi_surd_to_string(*y.exact) << " ~ "
            << pi_surd_to_float(*y.exact) << "\n";
    }
    out << "    effective: exact test " << (y.effective_exact ? "yes" : "no")
        << ", linear test " << (y.effective_linear ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace wps
