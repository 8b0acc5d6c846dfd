#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wps {

// All invariants are exact rationals; arbitrary precision is not optional
// (Dedekind sums for p ~ 1e9 and squared surd comparisons overflow 64 bits).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonCoprimeError : public Error {
public:
    explicit NonCoprimeError(const std::string& what) : Error(what) {}
};

class NotPairwiseCoprimeError : public Error {
public:
    explicit NotPairwiseCoprimeError(const std::string& what) : Error(what) {}
};

class NotSortedError : public Error {
public:
    explicit NotSortedError(const std::string& what) : Error(what) {}
};

class NonPositiveError : public Error {
public:
    explicit NonPositiveError(const std::string& what) : Error(what) {}
};

// Inverse of a modulo n, in [0, n). n = 1 returns 0 (trivial group).
// Throws NonCoprimeError if gcd(a mod n, n) != 1.
Int mod_inverse(const Int& a, const Int& n);

// "num/den" with den > 0 and the fraction in lowest terms, e.g. "-13/90".
std::string to_fraction_string(const Rational& r);

// Accepts "num/den" or a bare integer string.
Rational rational_from_string(const std::string& s);

double to_double(const Rational& r);

}  // namespace wps
