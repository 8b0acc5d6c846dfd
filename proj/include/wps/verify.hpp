#pragma once

#include "wps/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wps {

// Deterministic generator for the verify subcommand: splitmix64
// (Steele, Lea, Flood 2014). Fixed algorithm so a seed reproduces the same
// sample stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [1, hi] via modulo; bias is irrelevant here,
    // determinism is the contract.
    std::int64_t draw(std::int64_t hi) {
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi)) + 1;
    }

private:
    std::uint64_t state_;
};

struct VerifyFailure {
    std::string check;
    std::string input;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<VerifyFailure> failures;
};

// Runs `samples` rounds each of:
//   (a) rademacher_residual = 0 on random pairwise-coprime triples <= max_int
//   (b) fast vs brute-force Dedekind equality on random coprime pairs
//       (brute force capped at p <= 1e5)
//   (c) Euler / signature decomposition identities on random valid weights
//   (d) effective_linear => effective_exact on random valid weights
// All checks are theorems; any failure means an implementation bug.
VerifyReport run_verify(int samples, std::uint64_t seed, std::int64_t max_int);

// Deterministic text rendering (byte-identical for equal inputs).
std::string verify_report_to_text(const VerifyReport& rep);

}  // namespace wps
