#pragma once

#include "wps/bochner.hpp"
#include "wps/orbifold.hpp"
#include "wps/pi_surd.hpp"

#include <optional>
#include <string>

namespace wps {

enum class EinsteinTag { KaehlerEinsteinExists, EinsteinExists, Obstructed, Unknown };

struct EinsteinStatus {
    EinsteinTag tag;
    std::string note;  // short provenance for the tag
};

// Einstein-existence status of CP^2_(r,q,p):
//   KaehlerEinsteinExists  iff (r,q,p) = (1,1,1)            (Fubini-Study)
//   EinsteinExists         iff p < q+r, (r,q,p) != (1,1,1)  (conformal BK metric)
//   Obstructed             iff p >= (sqrt q + sqrt r)^2, tested exactly as
//                          p >= q+r and (p-q-r)^2 >= 4qr (equality included)
//   Unknown                otherwise (the open band q+r <= p < (sqrt q + sqrt r)^2)
EinsteinStatus einstein_status(const Weights& w);

struct YamabeReport {
    PiSurd elementary;               // 8 pi sqrt(6) / sqrt(p)
    PiSurd upper;                    // 4 pi sqrt(2) (r+q+p) / sqrt(rqp)
    bool upper_strict;               // true iff p > 1
    PiSurd reported_upper;           // exact minimum of elementary and upper
    std::optional<PiSurd> lower;     // 4 pi sqrt(6) sqrt(ht_deficit), iff deficit > 0
    bool lower_strict;               // true iff q+r < p < (sqrt q + sqrt r)^2
    bool lower_attained_by_bk_class; // true iff p < q+r
    std::optional<PiSurd> exact;     // 8 pi sqrt(6) / sqrt(p), iff p = q+r
    bool effective_exact;            // (r+q+p)^2 < 12 rq, i.e. upper < elementary
    bool effective_linear;           // p < (2 sqrt 3 - 3) q + r, as (p-r+3q)^2 < 12 q^2
};

YamabeReport yamabe_report(const Weights& w);

struct Classification {
    Weights weights;
    TopologyReport topology;
    ScalarCurvatureProfile scalar_profile;
    ConformalRegime conformal_regime;
    bool kaehler_einstein;  // true iff (r,q,p) = (1,1,1)
    EinsteinStatus einstein;
    YamabeReport yamabe;
};

// Assembles all sub-reports and runs the cross-field consistency checks
// (Obstructed implies ht_deficit <= 0; PositiveEinstein regime implies an
// Einstein metric exists). A check failure throws std::logic_error.
Classification classify(const Weights& w);

}  // namespace wps
