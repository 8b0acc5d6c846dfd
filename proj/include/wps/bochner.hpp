#pragma once

#include "wps/orbifold.hpp"
#include "wps/pi_surd.hpp"

#include <optional>

namespace wps {

enum class CurvatureRegime { PositiveEverywhere, NonnegVanishesAtPoint, SignChanging };

// Scalar curvature of the canonical Bochner-Kaehler metric,
//   R_g = a1 |u1|^2 + a2 |u2|^2 + a3 |u3|^2
// with a1 = 24 r (-r+q+p), a2 = 24 q (r-q+p), a3 = 24 p (r+q-p).
// R_g is linear on the simplex |u1|^2 + |u2|^2 + |u3|^2 = 1, so its range
// is [min(a), max(a)] and the sign regime is decided by the coefficient
// signs alone. a1 and a2 are always positive; only a3 can vanish or turn
// negative, which happens exactly at p = r+q and p > r+q.
struct ScalarCurvatureProfile {
    Int a1, a2, a3;
    Int min_R, max_R;
    CurvatureRegime regime;
    Rational volume_coeff;  // Vol(g) = volume_coeff * pi^2 = pi^2 / (2 p q r)
    std::optional<Location> zero_location;  // P001 when regime vanishes at a point
};

ScalarCurvatureProfile scalar_curvature_profile(const Weights& w);

// Yamabe energy of the canonical Bochner-Kaehler metric,
//   4 pi sqrt(2) (r+q+p) / sqrt(rqp),
// as the PiSurd (coeff 4(r+q+p), radicand 2/(rqp)).
PiSurd bk_yamabe_energy(const Weights& w);

// Behaviour of the Derdzinski conformal metric R_g^{-2} g, decided by
// sign(p - q - r).
enum class ConformalRegime { PositiveEinstein, RicciFlatPunctured, NegativePieces };

ConformalRegime conformal_einstein_regime(const Weights& w);

}  // namespace wps
