#include "wps/orbifold.hpp"
#include "wps/dedekind.hpp"

#include <doctest.h>

using namespace wps;

TEST_CASE("validate_weights accepts and rejects per the definition") {
    CHECK_NOTHROW(validate_weights(1, 1, 1));
    CHECK_NOTHROW(validate_weights(2, 3, 5));
    CHECK_THROWS_AS(validate_weights(2, 3, 4), NotPairwiseCoprimeError);  // gcd(2,4)=2
    CHECK_THROWS_AS(validate_weights(3, 2, 5), NotSortedError);
    CHECK_THROWS_AS(validate_weights(0, 1, 2), NonPositiveError);
    CHECK_THROWS_AS(validate_weights(-1, 1, 1), NonPositiveError);
    // no auto-reduction: (2,2,2) is rejected, not normalized to (1,1,1)
    CHECK_THROWS_AS(validate_weights(2, 2, 2), NotPairwiseCoprimeError);
}

TEST_CASE("eta invariant of cyclic actions") {
    CHECK(eta_invariant({0, 1}) == 0);
    CHECK(eta_invariant({1, 3}) == Rational(2, 9));   // 4 * 1/18
    CHECK(eta_invariant({4, 5}) == Rational(-4, 5));  // 4 * (-1/5)
}

TEST_CASE("singular points of small spaces") {
    CHECK(singular_points(validate_weights(1, 1, 1)).empty());

    auto pts = singular_points(validate_weights(1, 1, 2));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].location == Location::P001);
    CHECK(pts[0].action.a == 1);
    CHECK(pts[0].action.n == 2);
    CHECK(pts[0].order == 2);
    CHECK(pts[0].eta == 0);
    CHECK(pts[0].euler_contribution == Rational(1, 2));

    pts = singular_points(validate_weights(2, 3, 5));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].location == Location::P100);
    CHECK(pts[0].action.a == 1);  // 3^-1 * 5 mod 2
    CHECK(pts[0].action.n == 2);
    CHECK(pts[1].location == Location::P010);
    CHECK(pts[1].action.a == 1);  // 5^-1 * 2 mod 3 = 2*2 mod 3
    CHECK(pts[1].action.n == 3);
    CHECK(pts[2].location == Location::P001);
    CHECK(pts[2].action.a == 4);  // 2^-1 * 3 mod 5 = 3*3 mod 5
    CHECK(pts[2].action.n == 5);
}

TEST_CASE("topology report frozen examples") {
    TopologyReport t = topology_report(validate_weights(1, 1, 1));
    CHECK(t.euler_curvature_term == 3);
    CHECK(t.euler_singular_term == 0);
    CHECK(t.c1_squared == 9);
    CHECK(t.ht_deficit == 3);  // (4*1*1 - (1-2)^2) / 1

    t = topology_report(validate_weights(1, 1, 2));
    CHECK(t.euler_curvature_term == Rational(5, 2));
    CHECK(t.euler_singular_term == Rational(1, 2));
    CHECK(t.signature_curvature_term == 1);
    CHECK(t.signature_eta_term == 0);
    CHECK(t.c1_squared == 8);
    CHECK(t.ht_deficit == 2);

    t = topology_report(validate_weights(2, 3, 5));
    CHECK(t.euler_curvature_term == Rational(31, 30));
    CHECK(t.euler_singular_term == Rational(59, 30));
    CHECK(t.signature_eta_term == Rational(-26, 45));  // 4 * (-13/90)
    CHECK(t.c1_squared == Rational(10, 3));
    CHECK(t.ht_deficit == Rational(4, 5));
}

TEST_CASE("decomposition identities over all small triples") {
    int count = 0;
    for_each_valid_weights(60, [&](const Weights& w) {
        ++count;
        TopologyReport t = topology_report(w);  // self-checking
        CHECK(t.euler_curvature_term + t.euler_singular_term == 3);
        CHECK(t.signature_eta_term == -1 + t.signature_curvature_term);
        CHECK(t.c1_squared * (w.r() * w.q() * w.p()) ==
              (w.r() + w.q() + w.p()) * (w.r() + w.q() + w.p()));

        // deficit sign against the square-root threshold, in integers
        Int d = w.p() - w.q() - w.r();
        bool below_threshold = (w.p() <= w.q() + w.r()) || d * d < 4 * w.q() * w.r();
        CHECK((t.ht_deficit > 0) == below_threshold);

        auto pts = singular_points(w);
        CHECK(pts.size() <= 3);
        std::size_t nontrivial = (w.r() > 1 ? 1 : 0) + (w.q() > 1 ? 1 : 0) +
                                 (w.p() > 1 ? 1 : 0);
        CHECK(pts.size() == nontrivial);
        for (const auto& sp : pts) {
            CHECK(sp.order > 1);
            CHECK(sp.eta == 4 * dedekind_sum(sp.action.a, sp.action.n));
            CHECK(sp.euler_contribution == Rational(sp.order - 1, sp.order));
        }
    });
    CHECK(count > 500);  // enumeration actually covered the range
}

TEST_CASE("enumeration order is lexicographic in (p, q, r)") {
    std::vector<std::array<int, 3>> seen;
    for_each_valid_weights(5, [&](const Weights& w) {
        seen.push_back({w.p().convert_to<int>(), w.q().convert_to<int>(),
                        w.r().convert_to<int>()});
    });
    REQUIRE(seen.size() == 12);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(seen.front() == std::array<int, 3>{1, 1, 1});
    CHECK(seen.back() == std::array<int, 3>{5, 4, 3});
}
