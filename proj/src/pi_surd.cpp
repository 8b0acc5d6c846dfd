#include "wps/pi_surd.hpp"

#include <cmath>
#include <numbers>

namespace wps {

Rational pi_surd_square_over_pi2(const PiSurd& x) {
    return x.coeff * x.coeff * x.radicand;
}

Ordering pi_surd_compare(const PiSurd& x, const PiSurd& y) {
    // Both values are nonnegative multiples of pi, so comparing squares
    // (divided by pi^2) is equivalent to comparing the values.
    Rational xs = pi_surd_square_over_pi2(x);
    Rational ys = pi_surd_square_over_pi2(y);
    if (xs < ys) return Ordering::Less;
    if (xs > ys) return Ordering::Greater;
    return Ordering::Equal;
}

double pi_surd_to_float(const PiSurd& x) {
    long double c = x.coeff.convert_to<long double>();
    long double rad = x.radicand.convert_to<long double>();
    return static_cast<double>(c * std::numbers::pi_v<long double> * sqrtl(rad));
}

}  // namespace wps
