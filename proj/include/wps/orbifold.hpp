#pragma once

#include "wps/arith.hpp"

#include <vector>

namespace wps {

// Validated weight triple (r,q,p) with 1 <= r <= q <= p, pairwise coprime.
// Construction goes through validate_weights; triples are never auto-sorted
// or auto-reduced.
class Weights {
public:
    const Int& r() const { return r_; }
    const Int& q() const { return q_; }
    const Int& p() const { return p_; }

    friend Weights validate_weights(const Int& r, const Int& q, const Int& p);

    bool operator==(const Weights& o) const = default;

private:
    Weights(Int r, Int q, Int p)
        : r_(std::move(r)), q_(std::move(q)), p_(std::move(p)) {}
    Int r_, q_, p_;
};

// Throws NonPositiveError, NotSortedError or NotPairwiseCoprimeError.
Weights validate_weights(const Int& r, const Int& q, const Int& p);

enum class Location { P100, P010, P001 };

// Cyclic group of order n acting on C^2 by
//   (z1, z2) -> (e^{2 pi i k / n} z1, e^{2 pi i k a / n} z2).
// (a,n) = (0,1) encodes the trivial group; otherwise gcd(a,n) = 1 and
// a is reduced into [0, n).
struct CyclicActionType {
    Int a;
    Int n;
};

// eta invariant of S^3 / Gamma for a type (a,n)-action: 4 s(a,n).
Rational eta_invariant(const CyclicActionType& act);

struct SingularPoint {
    Location location;
    CyclicActionType action;
    Int order;                    // = action.n = |Gamma|, always > 1
    Rational eta;                 // 4 s(action.a, action.n)
    Rational euler_contribution;  // (order - 1) / order
};

// Singular points with order > 1, in location order P100, P010, P001.
// The actions are ((q^-1 mod r) p mod r, r), ((p^-1 mod q) r mod q, q)
// and ((r^-1 mod p) q mod p, p) respectively.
std::vector<SingularPoint> singular_points(const Weights& w);

// 2/r + 2/q + 2/p - r/pq - q/pr - p/qr. Nonpositive iff p >= (sqrt q + sqrt r)^2.
Rational hitchin_thorpe_deficit(const Weights& w);

struct TopologyReport {
    int euler_char = 3;  // chi of every weighted projective plane
    int signature = 1;   // tau likewise
    Rational euler_curvature_term;      // 1/r + 1/q + 1/p
    Rational euler_singular_term;       // sum (|Gamma|-1)/|Gamma|
    Rational signature_curvature_term;  // (1/3)(r/pq + q/pr + p/qr)
    Rational signature_eta_term;        // 4 * sum of the three Dedekind sums
    Rational c1_squared;                // (r+q+p)^2 / (rqp)
    Rational ht_deficit;                // hitchin_thorpe_deficit(w)
};

// Exact decomposition of chi = 3 and tau = 1 into curvature and singular
// parts. The decomposition identities are re-verified at runtime; a failure
// throws std::logic_error (it would mean an implementation bug).
TopologyReport topology_report(const Weights& w);

// Enumerates every valid triple with p <= max_p in lexicographic
// (p, q, r) ascending order.
template <typename F>
void for_each_valid_weights(const Int& max_p, F&& fn) {
    for (Int p = 1; p <= max_p; ++p) {
        for (Int q = 1; q <= p; ++q) {
            if (gcd(q, p) != 1) continue;
            for (Int r = 1; r <= q; ++r) {
                if (gcd(r, q) != 1 || gcd(r, p) != 1) continue;
                fn(validate_weights(r, q, p));
            }
        }
    }
}

}  // namespace wps
