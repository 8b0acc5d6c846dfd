#include "wps/arith.hpp"

#include <utility>

namespace wps {

Int mod_inverse(const Int& a, const Int& n) {
    if (n < 1) throw Error("mod_inverse: modulus must be positive");
    if (n == 1) return 0;
    Int r0 = n, r1 = a % n;
    if (r1 < 0) r1 += n;
    // extended Euclid, tracking only the coefficient of a
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        t0 -= k * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) {
        throw NonCoprimeError("mod_inverse: gcd(" + a.str() + ", " + n.str() +
                              ") = " + r0.str() + " != 1");
    }
    if (t0 < 0) t0 += n;
    return t0;
}

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("rational_from_string: zero denominator in \"" + s + "\"");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace wps
