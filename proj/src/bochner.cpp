#include "wps/bochner.hpp"

#include <algorithm>

namespace wps {

ScalarCurvatureProfile scalar_curvature_profile(const Weights& w) {
    const Int &r = w.r(), &q = w.q(), &p = w.p();
    ScalarCurvatureProfile s;
    s.a1 = 24 * r * (-r + q + p);
    s.a2 = 24 * q * (r - q + p);
    s.a3 = 24 * p * (r + q - p);
    s.min_R = std::min({s.a1, s.a2, s.a3});
    s.max_R = std::max({s.a1, s.a2, s.a3});
    if (p < r + q) {
        s.regime = CurvatureRegime::PositiveEverywhere;
    } else if (p == r + q) {
        s.regime = CurvatureRegime::NonnegVanishesAtPoint;
        s.zero_location = Location::P001;
    } else {
        s.regime = CurvatureRegime::SignChanging;
    }
    s.volume_coeff = Rational(Int(1), 2 * p * q * r);
    return s;
}

PiSurd bk_yamabe_energy(const Weights& w) {
    const Int &r = w.r(), &q = w.q(), &p = w.p();
    return PiSurd{Rational(4 * (r + q + p)), Rational(Int(2), r * q * p)};
}

ConformalRegime conformal_einstein_regime(const Weights& w) {
    Int d = w.p() - w.q() - w.r();
    if (d < 0) return ConformalRegime::PositiveEinstein;
    if (d == 0) return ConformalRegime::RicciFlatPunctured;
    return ConformalRegime::NegativePieces;
}

}  // namespace wps
