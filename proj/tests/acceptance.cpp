// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Everything here is an exact identity or a golden comparison; the only
// tolerances are the stated float ones.

#include "wps/classify.hpp"
#include "wps/dedekind.hpp"
#include "wps/serialize.hpp"
#include "wps/survey.hpp"
#include "wps/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>

using namespace wps;

namespace {

int g_failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f s", s);
    return buf;
}

// 1. Fast vs brute-force Dedekind: exhaustive p <= 2000, 1000 random p <= 1e5,
//    zero mismatches, under 60 s.
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    long long mismatches = 0, pairs = 0;
    for (std::int64_t p = 1; p <= 2000; ++p) {
        for (std::int64_t q = 1; q <= p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            ++pairs;
            if (dedekind_sum(q, p) != dedekind_sum_bruteforce(q, p)) ++mismatches;
        }
    }
    SplitMix64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        std::int64_t p = rng.draw(100000);
        std::int64_t q;
        do {
            q = rng.draw(p);
        } while (std::gcd(q, p) != 1);
        ++pairs;
        if (dedekind_sum(q, p) != dedekind_sum_bruteforce(q, p)) ++mismatches;
    }
    double el = seconds_since(t0);
    std::ostringstream d;
    d << pairs << " pairs, " << mismatches << " mismatches, " << secs(el);
    report(1, "Dedekind fast = brute force", mismatches == 0 && el < 60.0, d.str());
}

// 2. Rademacher triple reciprocity: 1e4 random pairwise-coprime triples with
//    entries <= 1e6, exact zero residual, under 60 s.
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(777);
    long long nonzero = 0;
    for (int i = 0; i < 10000; ++i) {
        std::int64_t a, b, c;
        do {
            a = rng.draw(1000000);
            b = rng.draw(1000000);
            c = rng.draw(1000000);
        } while (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1);
        if (rademacher_residual(a, b, c) != 0) ++nonzero;
    }
    double el = seconds_since(t0);
    std::ostringstream d;
    d << "10000 triples, " << nonzero << " nonzero residuals, " << secs(el);
    report(2, "Rademacher triple reciprocity", nonzero == 0 && el < 60.0, d.str());
}

// 3. Euler and signature decompositions for every valid triple with p <= 300.
void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    long long failures = 0, triples = 0;
    for_each_valid_weights(300, [&](const Weights& w) {
        ++triples;
        TopologyReport t = topology_report(w);
        if (t.euler_curvature_term + t.euler_singular_term != 3) ++failures;
        if (t.signature_eta_term != -1 + t.signature_curvature_term) ++failures;
    });
    std::ostringstream d;
    d << triples << " triples, " << failures << " failures, "
      << secs(seconds_since(t0));
    report(3, "decomposition identities (p <= 300)", failures == 0, d.str());
}

// 4. Golden classification table for the named cases.
void criterion4() {
    bool ok = true;
    auto tag = [](int r, int q, int p) {
        return einstein_status(validate_weights(r, q, p)).tag;
    };
    ok &= tag(1, 1, 1) == EinsteinTag::KaehlerEinsteinExists;
    ok &= tag(1, 1, 2) == EinsteinTag::Unknown;
    ok &= tag(1, 1, 3) == EinsteinTag::Unknown;
    for (int p = 4; p <= 50; ++p) ok &= tag(1, 1, p) == EinsteinTag::Obstructed;
    ok &= tag(3, 4, 5) == EinsteinTag::EinsteinExists;
    for (auto [r, q, p] : {std::array{1, 2, 3}, std::array{2, 3, 5}}) {
        YamabeReport y = yamabe_report(validate_weights(r, q, p));
        ok &= y.exact.has_value() &&
              *y.exact == PiSurd{Rational(8), Rational(6, p)};
    }
    report(4, "golden classification table", ok);
}

// 5. CP^2 coincidence: upper = lower exactly for (1,1,1), value 12 sqrt(2) pi,
//    and no other triple with p <= 200 has coinciding bounds.
void criterion5() {
    YamabeReport y = yamabe_report(validate_weights(1, 1, 1));
    bool ok = y.lower.has_value() &&
              pi_surd_compare(y.upper, *y.lower) == Ordering::Equal;
    double v = pi_surd_to_float(y.upper);
    double expected = 12.0 * std::sqrt(2.0) * std::numbers::pi;
    ok &= std::fabs(v - expected) <= 1e-9 * expected;
    long long coincidences = 0;
    for_each_valid_weights(200, [&](const Weights& w) {
        YamabeReport yr = yamabe_report(w);
        if (yr.lower && pi_surd_compare(yr.upper, *yr.lower) == Ordering::Equal) {
            ++coincidences;
        }
    });
    ok &= coincidences == 1;
    std::ostringstream d;
    d << "value " << v << ", " << coincidences << " coincidence(s) for p <= 200";
    report(5, "bounds coincide only for (1,1,1)", ok, d.str());
}

// 6. Critical case p = q+r: deficit exactly 4/p, lower = elementary = exact.
void criterion6() {
    SplitMix64 rng(606);
    long long failures = 0;
    for (int i = 0; i < 200; ++i) {
        std::int64_t r, q;
        do {
            r = rng.draw(1000000);
            q = rng.draw(1000000);
            if (r > q) std::swap(r, q);
        } while (std::gcd(r, q) != 1);
        Weights w = validate_weights(r, q, r + q);
        if (hitchin_thorpe_deficit(w) != Rational(Int(4), w.p())) ++failures;
        YamabeReport y = yamabe_report(w);
        if (!y.exact || !y.lower) {
            ++failures;
            continue;
        }
        if (!pi_surd_equal(*y.lower, y.elementary) ||
            !pi_surd_equal(*y.exact, y.elementary)) {
            ++failures;
        }
    }
    std::ostringstream d;
    d << "200 random critical triples, " << failures << " failures";
    report(6, "critical-case identity", failures == 0, d.str());
}

// 7. Region consistency for p <= 500.
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    long long failures = 0, triples = 0;
    for_each_valid_weights(500, [&](const Weights& w) {
        ++triples;
        YamabeReport y = yamabe_report(w);
        if (y.effective_linear && !y.effective_exact) ++failures;
        bool obstructed = einstein_status(w).tag == EinsteinTag::Obstructed;
        if (obstructed != (hitchin_thorpe_deficit(w) <= 0)) ++failures;
    });
    std::ostringstream d;
    d << triples << " triples, " << failures << " failures, "
      << secs(seconds_since(t0));
    report(7, "region consistency (p <= 500)", failures == 0, d.str());
}

// 8. Cotangent float within 1e-6 of exact for all coprime pairs with p <= 1e4.
void criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    long long failures = 0, pairs = 0;
    double worst = 0.0;
    for (std::int64_t p = 1; p <= 10000; ++p) {
        auto cot = cotangent_table(p);
        for (std::int64_t q = 1; q <= p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            ++pairs;
            double f = dedekind_cotangent_float(q, p, cot);
            double e = to_double(dedekind_sum_bruteforce(q, p));
            double diff = std::fabs(f - e);
            if (diff > worst) worst = diff;
            if (diff >= 1e-6) ++failures;
        }
    }
    std::ostringstream d;
    d << pairs << " pairs, worst |diff| " << worst << ", " << failures
      << " failures, " << secs(seconds_since(t0));
    report(8, "cotangent float cross-check (p <= 1e4)", failures == 0, d.str());
}

// 9. CLI determinism: survey golden file, verify byte-identical and exit 0.
void criterion9() {
    auto shell = [](const std::string& cmd) {
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string cli = WPS_CLI_PATH;
    bool ok = true;

    int rc = shell(cli + " survey --max-p 5 --format csv > /tmp/wps_acc_survey.csv 2>/dev/null");
    ok &= rc == 0;
    std::string got = slurp("/tmp/wps_acc_survey.csv");
    std::string want = slurp(std::string(WPS_GOLDEN_DIR) + "/survey_maxp5.csv");
    ok &= !want.empty() && got == want;
    long records = std::count(got.begin(), got.end(), '\n') - 1;  // minus header
    ok &= records == 12;

    rc = shell(cli + " verify --samples 100 --seed 7 > /tmp/wps_acc_verify1.txt 2>&1");
    ok &= rc == 0;
    rc = shell(cli + " verify --samples 100 --seed 7 > /tmp/wps_acc_verify2.txt 2>&1");
    ok &= rc == 0;
    ok &= slurp("/tmp/wps_acc_verify1.txt") == slurp("/tmp/wps_acc_verify2.txt");

    std::ostringstream d;
    d << records << " survey records";
    report(9, "CLI determinism and golden survey", ok, d.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion/criteria FAILED"
              << std::endl;
    return 1;
}
