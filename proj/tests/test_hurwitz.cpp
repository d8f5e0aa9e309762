#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "lc/complex_core.hpp"
#include "lc/hurwitz.hpp"

using namespace lc;

TEST_CASE("permutation parsing and algebra") {
    Perm p = Perm::parse(3, "(1 2 3)");
    CHECK(p.apply(0) == 1);
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(2) == 0);
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(Perm::parse(4, "()").is_identity());
    CHECK(Perm::parse(5, "(1 2)(3 4 5)").to_cycle_string() == "(1 2)(3 4 5)");

    CHECK_THROWS_AS(Perm::parse(3, "(12"), Error);      // unbalanced
    CHECK_THROWS_AS(Perm::parse(3, "(1 4)"), Error);    // out of range
    CHECK_THROWS_AS(Perm::parse(3, "(1 1)"), Error);    // repeated
}

TEST_CASE("monodromy invariants are enforced") {
    MonodromyDatum bad;
    bad.n = 3;
    bad.q = 2;
    bad.sigma = {Perm::parse(3, "(1 2 3)"), Perm::parse(3, "(1 2 3)")};
    CHECK_THROWS_AS(bad.check(), ProductNotIdentity);

    MonodromyDatum split;
    split.n = 4;
    split.q = 2;
    split.sigma = {Perm::parse(4, "(1 2)"), Perm::parse(4, "(1 2)")};
    CHECK_THROWS_AS(split.check(), NonTransitive);
}

TEST_CASE("covering summaries of the reference examples") {
    {
        MonodromyDatum d;  // unbranched single sheet
        d.n = 1;
        d.q = 3;
        d.sigma.assign(3, Perm::identity(1));
        CoveringSummary s = covering_summary(d);
        CHECK(s.total_branching == 0);
        CHECK(s.genus == 0);
        CHECK(s.mean_ramification == Rational(0));
        CHECK(s.closed_sphere_identity);
    }
    {
        MonodromyDatum d;
        d.n = 2;
        d.q = 2;
        d.sigma = {Perm::parse(2, "(1 2)"), Perm::parse(2, "(1 2)")};
        CoveringSummary s = covering_summary(d);
        CHECK(s.total_branching == 2);
        CHECK(s.genus == 0);
        CHECK(s.mean_ramification == Rational(1));  // 2 - 2/2
    }
    {
        MonodromyDatum d;  // cyclic triple cover
        d.n = 3;
        d.q = 2;
        d.sigma = {Perm::parse(3, "(1 2 3)"), Perm::parse(3, "(1 3 2)")};
        CoveringSummary s = covering_summary(d);
        CHECK(s.total_branching == 4);
        CHECK(s.genus == 0);
        CHECK(s.mean_ramification == Rational(4, 3));  // 2 - 2/3
    }
    {
        MonodromyDatum d;  // elliptic curve
        d.n = 2;
        d.q = 4;
        d.sigma.assign(4, Perm::parse(2, "(1 2)"));
        CoveringSummary s = covering_summary(d);
        CHECK(s.total_branching == 4);
        CHECK(s.euler_characteristic == 0);
        CHECK(s.genus == 1);
        CHECK(s.mean_ramification == Rational(2));
        CHECK(!s.closed_sphere_identity);
    }
}

TEST_CASE("faces over a_i biject with the cycles of sigma_i") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> nd(1, 8), qd(2, 5);
    for (int trial = 0; trial < 60; ++trial) {
        MonodromyDatum d = random_transitive_monodromy(rng, nd(rng), qd(rng));
        LineComplex c = build_from_monodromy(d);
        REQUIRE(validate(c).ok());
        FaceSet fs = trace_faces(c);
        REQUIRE(fs.labels_consistent);

        // Multiset of face sizes per branch label vs cycle lengths of sigma.
        for (int i = 0; i < d.q; ++i) {
            std::vector<std::uint64_t> face_ms;
            for (const Face& f : fs.faces)
                if (f.branch_label == static_cast<std::uint32_t>(i + 1)) face_ms.push_back(f.m);
            std::vector<std::uint64_t> cycle_lengths;
            for (const auto& cyc : d.sigma[i].cycles()) cycle_lengths.push_back(cyc.size());
            std::sort(face_ms.begin(), face_ms.end());
            std::sort(cycle_lengths.begin(), cycle_lengths.end());
            REQUIRE(face_ms == cycle_lengths);
        }
    }
}

TEST_CASE("sum of V_P equals twice the total branching, any genus") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> nd(1, 8), qd(2, 5);
    for (int trial = 0; trial < 60; ++trial) {
        MonodromyDatum d = random_transitive_monodromy(rng, nd(rng), qd(rng));
        LineComplex c = build_from_monodromy(d);
        FaceSet fs = trace_faces(c);
        Rational total = 0;
        for (VertexId v = 0; v < c.vertex_count(); ++v)
            total += vertex_ramification(fs.faces_at(c, v));
        CoveringSummary s = covering_summary(d);
        CHECK(total == Rational(2 * BigInt(s.total_branching)));
        if (s.genus == 0)
            CHECK(s.mean_ramification == Rational(2) - Rational(BigInt(2), BigInt(d.n)));
    }
}
