#include "wps/verify.hpp"

#include "wps/classify.hpp"
#include "wps/dedekind.hpp"
#include "wps/orbifold.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace wps {

namespace {

constexpr std::int64_t kBruteCap = 100000;

void fail(VerifyReport& rep, std::string check, std::string input,
          std::string expected, std::string got) {
    rep.failures.push_back({std::move(check), std::move(input),
                            std::move(expected), std::move(got)});
}

// Random pairwise-coprime triple with entries in [1, hi].
std::array<std::int64_t, 3> draw_coprime_triple(SplitMix64& rng, std::int64_t hi) {
    for (;;) {
        std::int64_t a = rng.draw(hi), b = rng.draw(hi), c = rng.draw(hi);
        if (std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1) {
            return {a, b, c};
        }
    }
}

void check_rademacher(VerifyReport& rep, SplitMix64& rng, std::int64_t max_int) {
    auto [a, b, c] = draw_coprime_triple(rng, max_int);
    Rational res = rademacher_residual(a, b, c);
    if (res != 0) {
        std::ostringstream in;
        in << "(" << a << ", " << b << ", " << c << ")";
        fail(rep, "rademacher_residual", in.str(), "0/1", to_fraction_string(res));
    }
}

void check_fast_vs_brute(VerifyReport& rep, SplitMix64& rng, std::int64_t max_int) {
    std::int64_t p = rng.draw(std::min(max_int, kBruteCap));
    std::int64_t q;
    do {
        q = rng.draw(p);
    } while (std::gcd(q, p) != 1);
    Rational fast = dedekind_sum(q, p);
    Rational brute = dedekind_sum_bruteforce(q, p);
    if (fast != brute) {
        std::ostringstream in;
        in << "(" << q << ", " << p << ")";
        fail(rep, "dedekind_fast_vs_brute", in.str(), to_fraction_string(brute),
             to_fraction_string(fast));
    }
}

void check_decompositions(VerifyReport& rep, SplitMix64& rng, std::int64_t max_int) {
    auto t = draw_coprime_triple(rng, max_int);
    std::sort(t.begin(), t.end());
    Weights w = validate_weights(t[0], t[1], t[2]);
    std::ostringstream in;
    in << "(" << t[0] << ", " << t[1] << ", " << t[2] << ")";
    // topology_report self-checks too; recompute the identities here so a
    // failure is reported instead of thrown.
    TopologyReport rpt;
    try {
        rpt = topology_report(w);
    } catch (const std::logic_error& e) {
        fail(rep, "topology_decomposition", in.str(), "identities hold", e.what());
        return;
    }
    Rational euler = rpt.euler_curvature_term + rpt.euler_singular_term;
    if (euler != 3) {
        fail(rep, "euler_decomposition", in.str(), "3/1", to_fraction_string(euler));
    }
    Rational expected_eta = -1 + rpt.signature_curvature_term;
    if (rpt.signature_eta_term != expected_eta) {
        fail(rep, "signature_decomposition", in.str(), to_fraction_string(expected_eta),
             to_fraction_string(rpt.signature_eta_term));
    }
}

void check_effective_implication(VerifyReport& rep, SplitMix64& rng,
                                 std::int64_t max_int) {
    auto t = draw_coprime_triple(rng, max_int);
    std::sort(t.begin(), t.end());
    Weights w = validate_weights(t[0], t[1], t[2]);
    YamabeReport y = yamabe_report(w);
    if (y.effective_linear && !y.effective_exact) {
        std::ostringstream in;
        in << "(" << t[0] << ", " << t[1] << ", " << t[2] << ")";
        fail(rep, "effective_linear_implies_exact", in.str(),
             "effective_exact = true", "effective_exact = false");
    }
}

}  // namespace

VerifyReport run_verify(int samples, std::uint64_t seed, std::int64_t max_int) {
    if (samples < 1) throw Error("verify: samples must be >= 1");
    if (max_int < 1) throw Error("verify: max-int must be >= 1");
    VerifyReport rep;
    rep.seed = seed;
    rep.samples = samples;
    SplitMix64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        check_rademacher(rep, rng, max_int);
        check_fast_vs_brute(rep, rng, max_int);
        check_decompositions(rep, rng, max_int);
        check_effective_implication(rep, rng, max_int);
    }
    return rep;
}

std::string verify_report_to_text(const VerifyReport& rep) {
    std::ostringstream out;
    out << "verify: seed " << rep.seed << ", " << rep.samples
        << " samples per check\n";
    out << "checks: rademacher_residual, dedekind_fast_vs_brute, "
           "topology_decomposition, effective_linear_implies_exact\n";
    if (rep.failures.empty()) {
        out << "result: all checks passed\n";
    } else {
        out << "result: " << rep.failures.size() << " FAILURE(S)\n";
        for (const auto& f : rep.failures) {
            out << "  " << f.check << " " << f.input << ": expected " << f.expected
                << ", got " << f.got << "\n";
        }
    }
    return out.str();
}

}  // namespace wps
