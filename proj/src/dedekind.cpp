#include "wps/dedekind.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace wps {

namespace {

// q mod p in [0, p); rejects non-coprime input. p = 1 maps everything to 0.
Int reduce_and_check(const Int& q, const Int& p, const char* who) {
    if (p < 1) throw Error(std::string(who) + ": p must be positive");
    Int qr = q % p;
    if (qr < 0) qr += p;
    if (p > 1 && gcd(qr, p) != 1) {
        throw NonCoprimeError(std::string(who) + ": gcd(" + q.str() + ", " +
                              p.str() + ") != 1");
    }
    return qr;
}

Int int_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    Int hi = static_cast<std::uint64_t>(u >> 64);
    Int out = (hi << 64) | static_cast<std::uint64_t>(u);
    return neg ? -out : out;
}

}  // namespace

Rational dedekind_sum(const Int& q, const Int& p) {
    Int a = reduce_and_check(q, p, "dedekind_sum");
    Int b = p;
    // s(a,b) = -1/4 + (a^2 + b^2 + 1)/(12ab) - s(b mod a, a), ending with
    // the closed form s(1,b) = (b-1)(b-2)/(12b).
    Rational s = 0;
    int sign = 1;
    while (a > 1) {
        s += sign * (Rational(a * a + b * b + 1, 12 * a * b) - Rational(1, 4));
        Int next = b % a;
        b = a;
        a = next;
        sign = -sign;
    }
    if (a == 1 && b > 1) s += sign * Rational((b - 1) * (b - 2), 12 * b);
    return s;
}

Rational dedekind_sum_bruteforce(const Int& q, const Int& p) {
    Int qr = reduce_and_check(q, p, "dedekind_sum_bruteforce");
    if (p == 1) return 0;
    if (p > std::numeric_limits<std::int64_t>::max()) {
        throw Error("dedekind_sum_bruteforce: p too large for the O(p) oracle");
    }
    const std::int64_t pp = p.convert_to<std::int64_t>();
    const std::int64_t qq = qr.convert_to<std::int64_t>();
    // 4 p^2 s(q,p) = sum_{j=1}^{p-1} (2j - p)(2k_j - p) with k_j = q j mod p.
    // The j <-> p-j terms are equal, so sum the first half and double;
    // for even p the middle term j = p/2 has 2j - p = 0.
    __int128 acc = 0;
    std::int64_t k = 0;
    for (std::int64_t j = 1; 2 * j < pp; ++j) {
        k += qq;
        if (k >= pp) k -= pp;
        acc += static_cast<__int128>(2 * j - pp) * (2 * k - pp);
    }
    return Rational(2 * int_from_i128(acc), 4 * p * p);
}

std::vector<double> cotangent_table(std::int64_t p) {
    std::vector<double> cot(static_cast<std::size_t>(p), 0.0);
    const long double pi = std::numbers::pi_v<long double>;
    for (std::int64_t j = 1; 2 * j <= p; ++j) {
        long double x = pi * static_cast<long double>(j) / static_cast<long double>(p);
        double c = static_cast<double>(cosl(x) / sinl(x));
        cot[static_cast<std::size_t>(j)] = c;
        cot[static_cast<std::size_t>(p - j)] = -c;  // cot(pi - x) = -cot(x)
    }
    if (p % 2 == 0) cot[static_cast<std::size_t>(p / 2)] = 0.0;
    return cot;
}

double dedekind_cotangent_float(std::int64_t q, std::int64_t p,
                                std::span<const double> cot) {
    if (p < 1) throw Error("dedekind_cotangent_float: p must be positive");
    std::int64_t qq = q % p;
    if (qq < 0) qq += p;
    if (p > 1 && std::gcd(qq, p) != 1) {
        throw NonCoprimeError("dedekind_cotangent_float: gcd(q,p) != 1");
    }
    if (p == 1) return 0.0;
    // Terms for j and p-j coincide, so sum the first half and double.
    double acc = 0.0;
    std::int64_t k = 0;
    for (std::int64_t j = 1; 2 * j < p; ++j) {
        k += qq;
        if (k >= p) k -= p;
        acc += cot[static_cast<std::size_t>(j)] * cot[static_cast<std::size_t>(k)];
    }
    return 2.0 * acc / (4.0 * static_cast<double>(p));
}

double dedekind_cotangent_float(std::int64_t q, std::int64_t p) {
    if (p < 1) throw Error("dedekind_cotangent_float: p must be positive");
    if (p == 1) return 0.0;
    return dedekind_cotangent_float(q, p, cotangent_table(p));
}

Rational rademacher_residual(const Int& r, const Int& q, const Int& p) {
    if (r < 1 || q < 1 || p < 1) {
        throw Error("rademacher_residual: weights must be positive");
    }
    if (gcd(r, q) != 1 || gcd(r, p) != 1 || gcd(q, p) != 1) {
        throw NotPairwiseCoprimeError("rademacher_residual: (" + r.str() + ", " +
                                      q.str() + ", " + p.str() +
                                      ") is not pairwise coprime");
    }
    Rational lhs = dedekind_sum(mod_inverse(q, r) * p, r) +
                   dedekind_sum(mod_inverse(p, q) * r, q) +
                   dedekind_sum(mod_inverse(r, p) * q, p);
    Rational rhs = Rational(-1, 4) +
                   (Rational(r, p * q) + Rational(q, p * r) + Rational(p, q * r)) / 12;
    return lhs - rhs;
}

}  // namespace wps
