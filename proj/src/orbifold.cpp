#include "wps/orbifold.hpp"

#include "wps/dedekind.hpp"

#include <stdexcept>

namespace wps {

Weights validate_weights(const Int& r, const Int& q, const Int& p) {
    if (r < 1 || q < 1 || p < 1) {
        throw NonPositiveError("weights must be positive, got (" + r.str() + ", " +
                               q.str() + ", " + p.str() + ")");
    }
    if (!(r <= q && q <= p)) {
        throw NotSortedError("weights must satisfy r <= q <= p, got (" + r.str() +
                             ", " + q.str() + ", " + p.str() + ")");
    }
    auto check = [](const Int& a, const Int& b) {
        Int g = gcd(a, b);
        if (g != 1) {
            throw NotPairwiseCoprimeError("weights (" + a.str() + ", " + b.str() +
                                          ") share the factor " + g.str());
        }
    };
    check(r, q);
    check(r, p);
    check(q, p);
    return Weights(r, q, p);
}

Rational eta_invariant(const CyclicActionType& act) {
    return 4 * dedekind_sum(act.a, act.n);
}

namespace {

SingularPoint make_point(Location loc, const Int& a, const Int& n) {
    CyclicActionType act{a % n, n};
    return SingularPoint{loc, act, n, eta_invariant(act), Rational(n - 1, n)};
}

}  // namespace

std::vector<SingularPoint> singular_points(const Weights& w) {
    const Int &r = w.r(), &q = w.q(), &p = w.p();
    std::vector<SingularPoint> pts;
    if (r > 1) pts.push_back(make_point(Location::P100, mod_inverse(q, r) * p, r));
    if (q > 1) pts.push_back(make_point(Location::P010, mod_inverse(p, q) * r, q));
    if (p > 1) pts.push_back(make_point(Location::P001, mod_inverse(r, p) * q, p));
    return pts;
}

Rational hitchin_thorpe_deficit(const Weights& w) {
    const Int &r = w.r(), &q = w.q(), &p = w.p();
    return Rational(2, r) + Rational(2, q) + Rational(2, p) - Rational(r, p * q) -
           Rational(q, p * r) - Rational(p, q * r);
}

TopologyReport topology_report(const Weights& w) {
    const Int &r = w.r(), &q = w.q(), &p = w.p();
    TopologyReport t;
    t.euler_curvature_term = Rational(1, r) + Rational(1, q) + Rational(1, p);
    t.euler_singular_term =
        Rational(r - 1, r) + Rational(q - 1, q) + Rational(p - 1, p);
    Rational sig3 = Rational(r, p * q) + Rational(q, p * r) + Rational(p, q * r);
    t.signature_curvature_term = sig3 / 3;
    Rational eta_sum = 0;
    for (const auto& sp : singular_points(w)) eta_sum += sp.eta;
    t.signature_eta_term = eta_sum;
    t.c1_squared = Rational((r + q + p) * (r + q + p), r * q * p);
    t.ht_deficit = hitchin_thorpe_deficit(w);

    // Re-verify the decompositions; a failure here is a bug, not bad input.
    if (t.euler_curvature_term + t.euler_singular_term != t.euler_char) {
        throw std::logic_error("topology_report: Euler decomposition broken");
    }
    if (t.signature_eta_term != -1 + t.signature_curvature_term) {
        throw std::logic_error("topology_report: signature decomposition broken");
    }
    if (t.c1_squared != sig3 + 2 * t.euler_curvature_term) {
        throw std::logic_error("topology_report: c1^2 decomposition broken");
    }
    Int d = p - q - r;
    if (t.ht_deficit * (p * q * r) != 4 * q * r - d * d) {
        throw std::logic_error("topology_report: Hitchin-Thorpe deficit broken");
    }
    return t;
}

}  // namespace wps
