#include "wps/classify.hpp"

#include <stdexcept>

namespace wps {

EinsteinStatus einstein_status(const Weights& w) {
    const Int &r = w.r(), &q = w.q(), &p = w.p();
    if (r == 1 && q == 1 && p == 1) {
        return {EinsteinTag::KaehlerEinsteinExists,
                "CP^2 with the Fubini-Study metric"};
    }
    Int d = p - q - r;
    if (d < 0) {
        return {EinsteinTag::EinsteinExists,
                "conformally Einstein Bochner-Kaehler metric (p < q+r)"};
    }
    if (d * d >= 4 * q * r) {
        return {EinsteinTag::Obstructed,
                "orbifold Hitchin-Thorpe obstruction (p >= (sqrt q + sqrt r)^2)"};
    }
    if (d == 0) {
        return {EinsteinTag::Unknown, "critical case: Yamabe invariant exactly "
                                      "8*pi*sqrt(6/p), Einstein existence open"};
    }
    return {EinsteinTag::Unknown,
            "open band q+r <= p < (sqrt q + sqrt r)^2"};
}

YamabeReport yamabe_report(const Weights& w) {
    const Int &r = w.r(), &q = w.q(), &p = w.p();
    YamabeReport y;
    y.elementary = PiSurd{Rational(8), Rational(Int(6), p)};
    y.upper = bk_yamabe_energy(w);
    y.upper_strict = p > 1;
    y.reported_upper =
        pi_surd_compare(y.upper, y.elementary) == Ordering::Less ? y.upper
                                                                 : y.elementary;
    Rational deficit = hitchin_thorpe_deficit(w);
    if (deficit > 0) y.lower = PiSurd{Rational(4), 6 * deficit};
    Int d = p - q - r;
    y.lower_strict = d > 0 && d * d < 4 * q * r;
    y.lower_attained_by_bk_class = d < 0;
    if (d == 0) y.exact = y.elementary;
    y.effective_exact = (r + q + p) * (r + q + p) < 12 * r * q;
    Int lin = p - r + 3 * q;
    y.effective_linear = lin * lin < 12 * q * q;

    if (y.lower && pi_surd_compare(*y.lower, y.elementary) == Ordering::Greater) {
        throw std::logic_error("yamabe_report: lower bound exceeds the elementary bound");
    }
    if (y.exact && (!y.lower || !pi_surd_equal(*y.lower, y.elementary))) {
        throw std::logic_error("yamabe_report: critical-case bounds fail to coincide");
    }
    if (y.effective_linear && !y.effective_exact) {
        throw std::logic_error("yamabe_report: linear effectiveness without exact");
    }
    if (y.effective_exact !=
        (pi_surd_compare(y.upper, y.elementary) == Ordering::Less)) {
        throw std::logic_error("yamabe_report: effectiveness flag disagrees with bounds");
    }
    return y;
}

Classification classify(const Weights& w) {
    Classification c{w,
                     topology_report(w),
                     scalar_curvature_profile(w),
                     conformal_einstein_regime(w),
                     w.r() == 1 && w.q() == 1 && w.p() == 1,
                     einstein_status(w),
                     yamabe_report(w)};
    if (c.einstein.tag == EinsteinTag::Obstructed && c.topology.ht_deficit > 0) {
        throw std::logic_error("classify: obstructed triple with positive deficit");
    }
    if (c.conformal_regime == ConformalRegime::PositiveEinstein &&
        c.einstein.tag != EinsteinTag::EinsteinExists &&
        c.einstein.tag != EinsteinTag::KaehlerEinsteinExists) {
        throw std::logic_error("classify: positive Einstein regime without existence");
    }
    return c;
}

}  // namespace wps
