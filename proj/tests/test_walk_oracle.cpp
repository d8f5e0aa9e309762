#include <doctest.h>

#include "lc/hurwitz.hpp"
#include "lc/walk_oracle.hpp"

using namespace lc;

TEST_CASE("walks are reproducible for a fixed seed") {
    auto rule = make_modular_rule();
    WalkEstimate a = simulate_walk(*rule, 300, 500, 42);
    WalkEstimate b = simulate_walk(*rule, 300, 500, 42);
    CHECK(a.returned == b.returned);
    CHECK(a.return_fraction == b.return_fraction);
}

TEST_CASE("finite complexes are recurrent: return fraction approaches 1") {
    MonodromyDatum d;
    d.n = 2;
    d.q = 2;
    d.sigma = {Perm::parse(2, "(1 2)"), Perm::parse(2, "(1 2)")};
    FiniteComplexRule rule(build_from_monodromy(d));
    WalkEstimate short_run = simulate_walk(rule, 1000, 4, 7);
    WalkEstimate long_run = simulate_walk(rule, 1000, 1000, 7);
    CHECK(long_run.return_fraction > short_run.return_fraction);
    CHECK(long_run.return_fraction > 0.99);
}

TEST_CASE("exp skeleton walks like the integer line: recurrent signature") {
    ExpRule exp;
    WalkEstimate h3 = simulate_walk(exp, 3000, 1000, 11);
    WalkEstimate h4 = simulate_walk(exp, 3000, 10000, 11);
    CHECK(h3.return_fraction > 0.9);
    CHECK(h4.return_fraction > h3.return_fraction);
}

TEST_CASE("modular tree walk plateaus at the first-step escape value 1/2") {
    // From the root, the probability of ever returning solves
    // x = 1/3 + (2/3) x^2 along each branch: x = 1/2.
    auto rule = make_modular_rule();
    WalkEstimate est = simulate_walk(*rule, 4000, 4000, 13);
    CHECK(est.return_fraction == doctest::Approx(0.5).epsilon(0.06));
    CHECK(est.return_fraction < 0.6);
}

TEST_CASE("exp resistance is exactly nu/2: two arms in parallel") {
    ExpRule exp;
    ResistanceCurve curve = effective_resistance(exp, 16);
    REQUIRE(curve.depths.size() == 16);
    for (std::size_t i = 0; i < curve.depths.size(); ++i)
        CHECK(curve.resistance[i] ==
              doctest::Approx(static_cast<double>(curve.depths[i]) / 2.0).epsilon(1e-7));
}

TEST_CASE("modular resistance matches the series-parallel closed form") {
    // One branch of height h has resistance 1 - 2^{-h} from its root edge;
    // three branches in parallel give R(nu) = (2 - 2^{1-nu}) / 3 -> 2/3.
    auto rule = make_modular_rule();
    ResistanceCurve curve = effective_resistance(*rule, 12);
    for (std::size_t i = 0; i < curve.depths.size(); ++i) {
        const double nu = static_cast<double>(curve.depths[i]);
        const double expect = (2.0 - std::pow(2.0, 1.0 - nu)) / 3.0;
        CHECK(curve.resistance[i] == doctest::Approx(expect).epsilon(1e-7));
    }
    CHECK(curve.resistance.back() < 2.0 / 3.0 + 1e-6);
}

TEST_CASE("resistance is monotone in depth (Rayleigh)") {
    ChainTreeRule family(3, ChainSchedule::sqrt_growth(1, 4));
    ResistanceCurve curve = effective_resistance(family, 60);
    for (std::size_t i = 0; i + 1 < curve.resistance.size(); ++i)
        CHECK(curve.resistance[i] <= curve.resistance[i + 1] + 1e-9);
}

TEST_CASE("oracle verdicts on synthetic curves") {
    ResistanceCurve linear;
    for (int i = 1; i <= 12; ++i) {
        linear.depths.push_back(i);
        linear.resistance.push_back(0.5 * i);
    }
    CHECK(oracle_verdict(linear).value == SurfaceType::Parabolic);

    ResistanceCurve geometric;
    double r = 0.0;
    for (int i = 1; i <= 12; ++i) {
        r += std::pow(0.5, i);
        geometric.depths.push_back(i);
        geometric.resistance.push_back(r);
    }
    CHECK(oracle_verdict(geometric).value == SurfaceType::Hyperbolic);

    ResistanceCurve two_points;
    two_points.depths = {1, 2};
    two_points.resistance = {0.5, 1.0};
    CHECK_THROWS_AS(oracle_verdict(two_points), Error);
}

TEST_CASE("oracle verdicts on the reference skeletons") {
    CHECK(oracle_verdict(effective_resistance(ExpRule{}, 64)).value == SurfaceType::Parabolic);
    CHECK(oracle_verdict(effective_resistance(*make_modular_rule(), 12)).value ==
          SurfaceType::Hyperbolic);

    ChainTreeRule family(3, ChainSchedule::sqrt_growth(1, 4));
    ResistanceCurve curve = effective_resistance(family, 60);
    CHECK(oracle_verdict(curve).value == SurfaceType::Hyperbolic);
}
