#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "specdom/finite_type.hpp"
#include "specdom/kohn.hpp"
#include "specdom/polynomial.hpp"
#include "test_util.hpp"

using namespace specdom;
using testutil::P;

namespace {

/// Staircase oracle for h = (z1^a, z2^b): brute force over the lattice
/// points of each degree, testing divisibility directly. Returns the
/// smallest p <= cap with no escaping point, independent of any basis
/// computation.
std::optional<int> staircase_order(int a, int b, int cap) {
    for (int p = 1; p <= cap; ++p) {
        bool all_inside = true;
        for (int i = 0; i <= p; ++i) {
            int j = p - i;
            if (i < a && j < b) {
                all_inside = false;
                break;
            }
        }
        if (all_inside) return p;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("monomials of a fixed degree") {
    auto d3 = monomials_of_degree(2, 3);
    CHECK(d3.size() == 4);
    std::set<std::vector<int>> seen;
    for (const auto& m : d3) {
        CHECK(m.degree() == 3);
        seen.insert(m.e);
    }
    CHECK(seen.size() == d3.size());
    CHECK(monomials_of_degree(3, 2).size() == 6);
    auto d0 = monomials_of_degree(2, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].is_one());
}

TEST_CASE("vanishing order along a monomial curve") {
    // h = z1^2 z2 on (t, t^2): t^2 * t^2 = t^4.
    MonomialCurve phi{{Rational(1), Rational(1)}, {1, 2}};
    CHECK(curve_vanishing_order(P("z1^2*z2"), phi) == 4);
    // An axis curve kills anything divisible by the dead variable.
    MonomialCurve axis{{Rational(1), Rational(0)}, {1, 1}};
    CHECK_FALSE(curve_vanishing_order(P("z1*z2"), axis).has_value());
    CHECK(curve_vanishing_order(P("z1"), axis) == 1);
    // Cancellation: z1 - z2^2 on (t^2, t) vanishes identically.
    MonomialCurve graph{{Rational(1), Rational(1)}, {2, 1}};
    CHECK_FALSE(curve_vanishing_order(P("z1 - z2^2"), graph).has_value());
    CHECK(curve_vanishing_order(P("z1 - z2^2"), phi) == 1);
}

TEST_CASE("finite type order examples") {
    CHECK(finite_type_order(SpecialDomain(2, {P("z1"), P("z2")})) == 1);
    CHECK(finite_type_order(SpecialDomain(2, {P("z1^2"), P("z2^2")})) == 3);
    CHECK_FALSE(finite_type_order(SpecialDomain(2, {P("z1*z2")}), 12).has_value());
}

TEST_CASE("finite type order matches the staircase oracle for all (a, b) up to 6") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            SpecialDomain D(2, {P("z1^" + std::to_string(a)), P("z2^" + std::to_string(b))});
            auto p = finite_type_order(D, 12);
            auto oracle = staircase_order(a, b, 12);
            REQUIRE(p.has_value());
            CHECK(p == oracle);
            CHECK(*p == a + b - 1);
        }
}

TEST_CASE("finite type order is monotone under adding generators") {
    auto eng = testutil::make_rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        int a = testutil::rand_int(eng, 1, 4);
        int b = testutil::rand_int(eng, 1, 4);
        SpecialDomain small(2, {P("z1^" + std::to_string(a)), P("z2^" + std::to_string(b))});
        Monomial extra = testutil::random_monomial(eng, 2, 4);
        if (extra.is_one()) continue;
        std::vector<Polynomial> bigger = small.h;
        bigger.push_back(Polynomial::from_term(2, extra, Rational(1)));
        SpecialDomain large(2, std::move(bigger));
        auto ps = finite_type_order(small, 12);
        auto pl = finite_type_order(large, 12);
        REQUIRE(ps.has_value());
        REQUIRE(pl.has_value());
        CHECK(*pl <= *ps);
    }
}

TEST_CASE("finite p implies a zero-dimensional ideal") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            SpecialDomain D(2, {P("z1^" + std::to_string(a)), P("z2^" + std::to_string(b))});
            if (finite_type_order(D, 12).has_value())
                CHECK(is_zero_dimensional(Ideal(D.h)));
        }
    // The guard direction: a curve through the origin blocks the order.
    SpecialDomain curve(2, {P("z1*z2")});
    CHECK_FALSE(is_zero_dimensional(Ideal(curve.h)));
    CHECK_FALSE(finite_type_order(curve, 12).has_value());
}

TEST_CASE("type estimate examples") {
    TypeEstimate ball = dangelo_type_estimate(SpecialDomain(2, {P("z1"), P("z2")}));
    CHECK_FALSE(ball.infinite);
    CHECK(ball.value == 2);

    // Axis-curve reasoning: on (t, 0) only h1 = z1^a survives, touching
    // at order a, normalized by curve multiplicity 1 and doubled; the
    // other axis gives 2b; nothing with full support beats the max.
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            SpecialDomain D(2, {P("z1^" + std::to_string(a)), P("z2^" + std::to_string(b))});
            TypeEstimate t = dangelo_type_estimate(D);
            REQUIRE_FALSE(t.infinite);
            CHECK(t.value == 2 * std::max(a, b));
        }

    TypeEstimate inf = dangelo_type_estimate(SpecialDomain(2, {P("z1*z2")}));
    CHECK(inf.infinite);
    REQUIRE(inf.witness.has_value());
    // The witness curve genuinely lies inside the zero set of every h_j.
    CHECK_FALSE(curve_vanishing_order(P("z1*z2"), *inf.witness).has_value());
}

TEST_CASE("type estimate is at least 2 and monotone in the exponent cap") {
    auto eng = testutil::make_rng(909);
    for (int trial = 0; trial < 10; ++trial) {
        int a = testutil::rand_int(eng, 1, 4);
        int b = testutil::rand_int(eng, 1, 4);
        SpecialDomain D(2, {P("z1^" + std::to_string(a)), P("z2^" + std::to_string(b))});
        TypeEstimate coarse = dangelo_type_estimate(D, 2, 2, 7);
        TypeEstimate fine = dangelo_type_estimate(D, 5, 2, 7);
        REQUIRE_FALSE(coarse.infinite);
        REQUIRE_FALSE(fine.infinite);
        CHECK(coarse.value >= 2);
        CHECK(fine.value >= coarse.value);
    }
}

TEST_CASE("relation checks for the ball") {
    TypeEstimate two{false, Rational(2), std::nullopt};
    TypeReport r = check_relations(2, 1, 12, true, two);
    REQUIRE(r.p.has_value());
    CHECK(*r.p == 1);
    CHECK(r.q_hat == 1);
    REQUIRE(r.inequality_checks.size() == 3);
    for (const auto& [name, pass] : r.inequality_checks) CHECK(pass);
}

TEST_CASE("relation checks for the squares domain") {
    TypeEstimate four{false, Rational(4), std::nullopt};
    TypeReport r = check_relations(2, 3, 12, true, four);
    // Band {2, 3, 4} intersected with the Skoda range [3, 12] starts at 3.
    CHECK(r.q_hat == 3);
    REQUIRE(r.inequality_checks.size() == 3);
    CHECK(r.inequality_checks[0].first == "t_hat_at_least_2");
    CHECK(r.inequality_checks[1].first == "q_band_nonempty");
    CHECK(r.inequality_checks[2].first == "skoda_q_compatible");
    for (const auto& [name, pass] : r.inequality_checks) CHECK(pass);
}

TEST_CASE("relation checks are skipped without a finite p") {
    TypeEstimate inf{true, Rational(0), MonomialCurve{{Rational(1), Rational(0)}, {1, 1}}};
    TypeReport r = check_relations(2, std::nullopt, 12, false, inf);
    CHECK_FALSE(r.p.has_value());
    CHECK_FALSE(r.q_hat.has_value());
    CHECK(r.inequality_checks.empty());
}

TEST_CASE("full analysis of the three shipped domains") {
    TypeReport ball = analyze_type(SpecialDomain(2, {P("z1"), P("z2")}));
    CHECK(ball.p == 1);
    CHECK(ball.zero_dim);
    CHECK(ball.t_hat.value == 2);
    CHECK(ball.q_hat == 1);

    TypeReport sq = analyze_type(SpecialDomain(2, {P("z1^2"), P("z2^2")}));
    CHECK(sq.p == 3);
    CHECK(sq.zero_dim);
    CHECK_FALSE(sq.t_hat.infinite);
    CHECK(sq.t_hat.value == 4);
    CHECK(sq.q_hat == 3);
    REQUIRE(sq.inequality_checks.size() == 3);
    for (const auto& [name, pass] : sq.inequality_checks) CHECK(pass);

    TypeReport hyp = analyze_type(SpecialDomain(2, {P("z1*z2")}));
    CHECK_FALSE(hyp.p.has_value());
    CHECK_FALSE(hyp.zero_dim);
    CHECK(hyp.t_hat.infinite);
    CHECK(hyp.inequality_checks.empty());
    CHECK(hyp.p_cap == 12);
}

TEST_CASE("relation checks hold across the (a, b) sweep") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            SpecialDomain D(2, {P("z1^" + std::to_string(a)), P("z2^" + std::to_string(b))});
            TypeReport r = analyze_type(D);
            REQUIRE(r.p.has_value());
            CHECK(*r.p == a + b - 1);
            CHECK(r.t_hat.value == 2 * std::max(a, b));
            REQUIRE(r.q_hat.has_value());
            for (const auto& [name, pass] : r.inequality_checks) CHECK(pass);
        }
}
