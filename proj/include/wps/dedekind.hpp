#pragma once

#include "wps/arith.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wps {

// Exact Dedekind sum s(q,p). q is reduced modulo p first; s(q,1) = 0.
// Euclidean recursion on the two-term reciprocity law, O(log p) Rational ops.
// Throws NonCoprimeError if gcd(q mod p, p) != 1.
Rational dedekind_sum(const Int& q, const Int& p);

// Exact s(q,p) from the sawtooth sum
//   s(q,p) = sum_{j=1}^{p-1} ((j/p)) ((qj/p)),  ((x)) = x - floor(x) - 1/2.
// O(p) integer work; the oracle for dedekind_sum. p must fit in 64 bits.
Rational dedekind_sum_bruteforce(const Int& q, const Int& p);

// Floating evaluation of the literal cotangent sum
//   (1/4p) sum_{j=1}^{p-1} cot(pi j / p) cot(pi q j / p).
double dedekind_cotangent_float(std::int64_t q, std::int64_t p);

// cot(pi j / p) for j = 1..p-1 (index 0 unused). Shared across q for
// survey-scale cross-checks of a fixed p.
std::vector<double> cotangent_table(std::int64_t p);

double dedekind_cotangent_float(std::int64_t q, std::int64_t p,
                                std::span<const double> cot);

// s(q^{-1;r} p, r) + s(p^{-1;q} r, q) + s(r^{-1;p} q, p)
//   - [ -1/4 + (1/12)(r/pq + q/pr + p/qr) ].
// Identically zero; a nonzero result signals an implementation bug.
// Throws NotPairwiseCoprimeError unless r,q,p are pairwise coprime.
Rational rademacher_residual(const Int& r, const Int& q, const Int& p);

}  // namespace wps
