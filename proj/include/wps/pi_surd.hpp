#pragma once

#include "wps/arith.hpp"

namespace wps {

// Exact value of the form coeff * pi * sqrt(radicand), with coeff > 0 and
// radicand >= 0. Every Yamabe bound in this library has this shape, so exact
// comparison never needs floating point: for positive multiples of pi,
// x <=> y reduces to coeff^2 * radicand as a Rational comparison.
struct PiSurd {
    Rational coeff;
    Rational radicand;
};

// Structural equality; value equality is pi_surd_equal.
inline bool operator==(const PiSurd& a, const PiSurd& b) {
    return a.coeff == b.coeff && a.radicand == b.radicand;
}

enum class Ordering { Less, Equal, Greater };

Ordering pi_surd_compare(const PiSurd& x, const PiSurd& y);

inline bool pi_surd_equal(const PiSurd& x, const PiSurd& y) {
    return pi_surd_compare(x, y) == Ordering::Equal;
}

// coeff^2 * radicand, the square of the value divided by pi^2.
Rational pi_surd_square_over_pi2(const PiSurd& x);

// Floating approximation, accurate to about 1e-12 relative.
double pi_surd_to_float(const PiSurd& x);

}  // namespace wps
