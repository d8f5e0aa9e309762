#include <doctest.h>

#include "lc/exhaustion.hpp"
#include "lc/hurwitz.hpp"
#include "lc/rules.hpp"

using namespace lc;

namespace {

ExhaustOptions no_census() {
    ExhaustOptions opts;
    opts.allow_census = false;
    return opts;
}

}  // namespace

TEST_CASE("exp surface: V_nu = 2 identically") {
    ExpRule exp;
    ExhaustionReport rep = wreath_exhaust(exp, 50);
    REQUIRE(rep.effective_depth == 50);
    for (std::uint64_t nu = 1; nu <= 50; ++nu) {
        CHECK(rep.v_nu[nu - 1] == Rational(2));
        CHECK(rep.e_nu[nu - 1] == Rational(0));
        CHECK(rep.n_nu[nu - 1] == BigInt(2 * nu + 1));
    }
    CHECK(rep.regular());
    CHECK(rep.vp_distinct.front() == Rational(2));
}

TEST_CASE("modular surface: V_nu = 3 identically") {
    auto rule = make_modular_rule();
    ExhaustionReport rep = wreath_exhaust(*rule, 50);
    for (const Rational& v : rep.v_nu) CHECK(v == Rational(3));
    CHECK(rep.regular());
    // n_50 = 1 + 3(2^50 - 1): far beyond enumeration, exact by census.
    BigInt expect = (BigInt(1) << 50) - 1;
    CHECK(rep.n_nu.back() == 1 + 3 * expect);
}

TEST_CASE("census agrees with brute-force enumeration") {
    ExhaustOptions plain = no_census();

    ExpRule exp;
    ExhaustionReport a = wreath_exhaust(exp, 12);
    ExhaustionReport b = wreath_exhaust(exp, 12, plain);
    REQUIRE(a.v_nu.size() == b.v_nu.size());
    for (std::size_t i = 0; i < a.v_nu.size(); ++i) {
        CHECK(a.v_nu[i] == b.v_nu[i]);
        CHECK(a.n_nu[i] == b.n_nu[i]);
    }

    auto modular = make_modular_rule();
    a = wreath_exhaust(*modular, 10);
    b = wreath_exhaust(*modular, 10, plain);
    for (std::size_t i = 0; i < a.v_nu.size(); ++i) {
        CHECK(a.v_nu[i] == b.v_nu[i]);
        CHECK(a.n_nu[i] == b.n_nu[i]);
    }

    ChainTreeRule family(3, ChainSchedule::sqrt_growth(1, 4));
    a = wreath_exhaust(family, 25);
    b = wreath_exhaust(family, 25, plain);
    for (std::size_t i = 0; i < a.v_nu.size(); ++i) {
        CHECK(a.v_nu[i] == b.v_nu[i]);
        CHECK(a.n_nu[i] == b.n_nu[i]);
    }

    ChainTreeRule wide(4, ChainSchedule::constant(3));
    a = wreath_exhaust(wide, 9);
    b = wreath_exhaust(wide, 9, plain);
    for (std::size_t i = 0; i < a.v_nu.size(); ++i) {
        CHECK(a.v_nu[i] == b.v_nu[i]);
        CHECK(a.n_nu[i] == b.n_nu[i]);
    }
}

TEST_CASE("finite complexes exhaust to the covering mean") {
    MonodromyDatum d;
    d.n = 2;
    d.q = 2;
    d.sigma = {Perm::parse(2, "(1 2)"), Perm::parse(2, "(1 2)")};
    LineComplex c = build_from_monodromy(d);

    for (VertexId base = 0; base < c.vertex_count(); ++base) {
        FiniteComplexRule rule(c, base);
        ExhaustionReport rep = wreath_exhaust(rule, base, 50);
        CHECK(rep.exhausted);
        CHECK(rep.v_nu.back() == covering_summary(d).mean_ramification);
        CHECK(rep.n_nu.back() == BigInt(4));
    }
}

TEST_CASE("prefix stability: shorter runs are prefixes of longer ones") {
    ChainTreeRule family(3, ChainSchedule::sqrt_growth(1, 4));
    ExhaustionReport longer = wreath_exhaust(family, 30);
    ExhaustionReport shorter = wreath_exhaust(family, 18);
    for (std::size_t i = 0; i < shorter.v_nu.size(); ++i) {
        CHECK(shorter.v_nu[i] == longer.v_nu[i]);
        CHECK(shorter.n_nu[i] == longer.n_nu[i]);
    }
}

TEST_CASE("V_nu stays within [1, q] for the infinite reference rules") {
    auto check_range = [](const ExhaustionReport& rep, int q) {
        for (const Rational& v : rep.v_nu) {
            CHECK(v >= Rational(1));
            CHECK(v <= Rational(q));
        }
    };
    check_range(wreath_exhaust(ExpRule{}, 30), 2);
    check_range(wreath_exhaust(*make_modular_rule(), 30), 3);
    ChainTreeRule family(5, ChainSchedule::sqrt_growth(1, 8));
    check_range(wreath_exhaust(family, 60), 5);
}

TEST_CASE("exhaustion from a non-base vertex falls back to enumeration") {
    auto rule = make_modular_rule();
    VertexId other = rule->mate(rule->base(), 1).v;
    ExhaustionReport rep = wreath_exhaust(*rule, other, 8);
    for (const Rational& v : rep.v_nu) CHECK(v == Rational(3));
}

TEST_CASE("limit_estimate on constant, drifting and oscillating sequences") {
    // Constant: the exp surface.
    ExhaustionReport exp_rep = wreath_exhaust(ExpRule{}, 40);
    LimitEstimate est = limit_estimate(exp_rep, 10);
    CHECK(est.verdict == LimitEstimate::Verdict::Converged);
    CHECK(est.lim_inf_est == Rational(2));
    CHECK(est.lim_sup_est == Rational(2));

    // Monotone drift away from convergence at small depth: inconclusive.
    ChainTreeRule family(3, ChainSchedule::sqrt_growth(1, 96));
    ExhaustionReport drift = wreath_exhaust(family, 40);
    LimitEstimate drift_est = limit_estimate(drift, 30);
    CHECK(drift_est.verdict == LimitEstimate::Verdict::Inconclusive);

    // Engineered oscillation: alternating short and long chain blocks.
    ChainTreeRule osc(3, ChainSchedule::alternating(1, 99));
    ExhaustionReport osc_rep = wreath_exhaust(osc, 3000);
    LimitEstimate osc_est = limit_estimate(osc_rep, 2500);
    CHECK(osc_est.verdict == LimitEstimate::Verdict::Oscillating);
    CHECK(osc_est.lim_sup_est - osc_est.lim_inf_est > Rational(1, 10));

    CHECK_THROWS_AS(limit_estimate(exp_rep, 0), Error);
    CHECK_THROWS_AS(limit_estimate(exp_rep, 100), Error);
}

TEST_CASE("vertex budget failures are loud") {
    auto rule = make_modular_rule();
    ExhaustOptions opts = no_census();
    opts.max_vertices = 1000;
    CHECK_THROWS_AS(wreath_exhaust(*rule, 30, opts), Error);
}
