#include <doctest.h>

#include <random>

#include "lc/rules.hpp"

using namespace lc;

namespace {

// Involution, bipartiteness and slot-range checks over every dart of a ball.
void check_rule_structure(const LocalRule& rule, std::uint64_t radius) {
    Ball ball = materialize(rule, radius);
    for (VertexId v : ball.rule_id) {
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rule.q()); ++s) {
            Dart m = rule.mate(v, s);
            Dart back = rule.mate(m.v, m.slot);
            REQUIRE(back.v == v);
            REQUIRE(back.slot == s);
            REQUIRE(rule.color(m.v) == flip(rule.color(v)));
        }
    }
}

}  // namespace

TEST_CASE("exp rule: doubly infinite chain") {
    ExpRule exp;
    check_rule_structure(exp, 12);
    CHECK(exp.color(exp.base()) == Color::Inner);
    Ball ball = materialize(exp, 10);
    CHECK(ball.size() == 21);  // base plus 10 on each side
    GenerationSlice s = exp.shell_census()->shell(5);
    CHECK(s.vertex_count == 2);
    CHECK(s.ramification_sum == Rational(4));
}

TEST_CASE("chain schedules produce odd lengths") {
    CHECK(ChainSchedule::constant(1).length(7) == 1);
    CHECK(ChainSchedule::constant(2).length(1) == 3);  // rounded up to odd
    CHECK(ChainSchedule::constant(3).length(9) == 3);
    auto sq = ChainSchedule::sqrt_growth(1, 96);
    CHECK(sq.length(1) == 97);
    CHECK(sq.length(2) == 193);
    CHECK(sq.length(4) == 193);
    CHECK(sq.length(5) == 289);
    for (std::uint64_t k = 1; k < 40; ++k) {
        CHECK(sq.length(k) % 2 == 1);
        CHECK(sq.length(k) <= sq.length(k + 1));
    }
    CHECK_THROWS_AS(ChainSchedule::constant(0).length(1), ScheduleInvalid);
}

TEST_CASE("modular rule is the 3-regular tree") {
    auto rule = make_modular_rule();
    check_rule_structure(*rule, 8);
    Ball ball = materialize(*rule, 8);
    CHECK(ball.size() == 1 + 3 * ((1 << 8) - 1));
    // Every generation is branch vertices only.
    for (std::uint64_t nu = 1; nu <= 40; ++nu) {
        GenerationSlice s = rule->shell_census()->shell(nu);
        BigInt expect = 3;
        for (std::uint64_t j = 1; j < nu; ++j) expect *= 2;
        CHECK(s.vertex_count == expect);
        CHECK(s.ramification_sum == Rational(3 * expect));
    }
}

TEST_CASE("chain tree with constant chains has the expected shells") {
    ChainTreeRule rule(3, ChainSchedule::constant(3));
    check_rule_structure(rule, 10);
    // L = 3: generation k occupies radii (3(k-1), 3k]; interiors at offsets
    // 1, 2 carry V_P = 2, branch vertices at offset 3 carry V_P = 3.
    const ShellCensus* census = rule.shell_census();
    CHECK(census->shell(1).ramification_sum == Rational(2 * 3));
    CHECK(census->shell(2).ramification_sum == Rational(2 * 3));
    CHECK(census->shell(3).ramification_sum == Rational(3 * 3));
    CHECK(census->shell(4).vertex_count == 6);
    CHECK(census->shell(6).ramification_sum == Rational(3 * 6));
}

TEST_CASE("address codec round-trips") {
    ChainTreeRule::Address a{7, 12345, 17};
    auto b = ChainTreeRule::decode(ChainTreeRule::encode(a));
    CHECK(b.level == a.level);
    CHECK(b.index == a.index);
    CHECK(b.pos == a.pos);
}

TEST_CASE("walk cursor agrees with id-based moves where ids are safe") {
    std::mt19937_64 rng(5);
    auto check_against_ids = [&](const LocalRule& rule, int steps) {
        auto cursor = rule.walk_cursor();
        VertexId at = rule.base();
        for (int i = 0; i < steps; ++i) {
            std::uint32_t slot = static_cast<std::uint32_t>(rng() % rule.q());
            cursor->move(slot);
            at = rule.mate(at, slot).v;
            REQUIRE(cursor->at_base() == (at == rule.base()));
        }
    };
    check_against_ids(*make_modular_rule(), 4000);
    ChainTreeRule family(3, ChainSchedule::sqrt_growth(1, 4));
    check_against_ids(family, 4000);
    ChainTreeRule wide(5, ChainSchedule::constant(3));
    check_against_ids(wide, 4000);
    check_against_ids(ExpRule{}, 4000);
}

TEST_CASE("cursor survives walks far beyond the addressable depth") {
    auto rule = make_modular_rule();
    auto cursor = rule->walk_cursor();
    // Drift outward for long enough that flat ids would overflow.
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) cursor->move(static_cast<std::uint32_t>(1 + rng() % 2));
    CHECK(!cursor->at_base());
    cursor->reset();
    CHECK(cursor->at_base());
}

TEST_CASE("table rule: periodic chain equivalent to exp") {
    TableSpec spec;
    spec.q = 2;
    spec.extend = TableSpec::Extend::Linear;
    spec.colors = {Color::Inner, Color::Outer};
    spec.mate = {
        {{1, 1, -1}, {1, 0, 0}},
        {{0, 1, 0}, {0, 0, +1}},
    };
    spec.check();
    TableRule rule(spec);
    check_rule_structure(rule, 10);
    Ball ball = materialize(rule, 9);
    CHECK(ball.size() == 19);
}

TEST_CASE("table rule: malformed tables are rejected") {
    TableSpec spec;
    spec.q = 2;
    spec.colors = {Color::Inner, Color::Outer};
    spec.mate = {
        {{1, 0, 0}, {1, 1, 0}},
        {{0, 1, 0}, {0, 0, 0}},  // not involutive
    };
    CHECK_THROWS_AS(spec.check(), Error);

    TableSpec same_color;
    same_color.q = 2;
    same_color.colors = {Color::Inner, Color::Inner};
    same_color.mate = {
        {{1, 0, 0}, {1, 1, 0}},
        {{0, 0, 0}, {0, 1, 0}},
    };
    CHECK_THROWS_AS(same_color.check(), Error);
}
