#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lc/dilatation.hpp"

using namespace lc;

namespace {

// Oracle: ratio of singular values of the 2x2 Jacobian.
double singular_value_ratio(const JacobianSample& j) {
    const double a = j.ux, b = j.uy, c = j.vx, d = j.vy;
    const double t = a * a + b * b + c * c + d * d;
    const double det = a * d - b * c;
    const double disc = std::sqrt(std::max(0.0, t * t - 4 * det * det));
    const double s1 = std::sqrt((t + disc) / 2);
    const double s2 = std::sqrt((t - disc) / 2);
    return s1 / s2;
}

JacobianSample rotate(const JacobianSample& j, double theta, bool pre) {
    const double c = std::cos(theta), s = std::sin(theta);
    if (pre)  // J * R
        return {j.ux * c + j.uy * s, -j.ux * s + j.uy * c, j.vx * c + j.vy * s,
                -j.vx * s + j.vy * c};
    return {c * j.ux - s * j.vx, c * j.uy - s * j.vy, s * j.ux + c * j.vx, s * j.uy + c * j.vy};
}

}  // namespace

TEST_CASE("dilatation quotient on the pinned samples") {
    CHECK(dilatation_quotient({1, 0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dilatation_quotient({2, 0, 0, 1}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dilatation_quotient({0, -1, 1, 0}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dilatation quotient equals the singular value ratio") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    int accepted = 0;
    while (accepted < 200) {
        JacobianSample j{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
        if (j.det() <= 1e-3) continue;
        ++accepted;
        CHECK(dilatation_quotient(j) ==
              doctest::Approx(singular_value_ratio(j)).epsilon(1e-10));
    }
}

TEST_CASE("scale and rotation invariance") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    int accepted = 0;
    while (accepted < 100) {
        JacobianSample j{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
        if (j.det() <= 1e-3) continue;
        ++accepted;
        const double d = dilatation_quotient(j);
        const double c = scale(rng);
        JacobianSample scaled{c * j.ux, c * j.uy, c * j.vx, c * j.vy};
        CHECK(dilatation_quotient(scaled) == doctest::Approx(d).epsilon(1e-12));
        const double theta = angle(rng);
        CHECK(dilatation_quotient(rotate(j, theta, true)) == doctest::Approx(d).epsilon(1e-12));
        CHECK(dilatation_quotient(rotate(j, theta, false)) == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("degenerate Jacobians are rejected") {
    CHECK_THROWS_AS(dilatation_quotient({1, 0, 0, -1}), DegenerateJacobian);  // reflection
    CHECK_THROWS_AS(dilatation_quotient({1, 0, 1, 0}), DegenerateJacobian);   // rank 1
}

TEST_CASE("grid of holomorphic derivatives is conformal to machine precision") {
    // z -> z^2: derivative 2z, so (ux, uy, vx, vy) = (2x, -2y, 2y, 2x).
    std::vector<std::vector<JacobianSample>> grid;
    for (int i = 1; i <= 8; ++i) {
        grid.emplace_back();
        for (int k = 1; k <= 8; ++k) {
            const double x = 0.2 * i, y = 0.2 * k;
            grid.back().push_back({2 * x, -2 * y, 2 * y, 2 * x});
        }
    }
    GridDilatation g = grid_dilatation(grid);
    CHECK(g.max_d == doctest::Approx(1.0).epsilon(1e-12));
    for (double d : g.field) CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("radial stretch r -> r^2 has dilatation 2 everywhere") {
    // f(z) = z |z|: in polar, radial derivative 2r, tangential r; the oracle
    // by symbolic differentiation gives D = 2 independent of the point.
    std::vector<std::vector<JacobianSample>> grid;
    for (int i = 1; i <= 6; ++i) {
        grid.emplace_back();
        for (int k = 0; k < 6; ++k) {
            const double r = 0.5 + 0.3 * i;
            const double th = 2 * std::numbers::pi * k / 6.0;
            const double x = r * std::cos(th), y = r * std::sin(th);
            grid.back().push_back(
                {r + x * x / r, x * y / r, x * y / r, r + y * y / r});
        }
    }
    GridDilatation g = grid_dilatation(grid);
    CHECK(g.max_d == doctest::Approx(2.0).epsilon(1e-12));
    for (double d : g.field) CHECK(d == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("affine grids have a constant field") {
    JacobianSample affine{3, 1, 0, 2};
    std::vector<std::vector<JacobianSample>> grid(4, std::vector<JacobianSample>(4, affine));
    GridDilatation g = grid_dilatation(grid);
    const double expect = singular_value_ratio(affine);
    for (double d : g.field) CHECK(d == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("annulus modulus closed forms") {
    CHECK(annulus_modulus({1.0, std::exp(2 * std::numbers::pi)}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Doubling the outer radius adds log 2 / (2 pi) ~ 0.110318.
    const double before = annulus_modulus({1.0, 5.0});
    const double after = annulus_modulus({1.0, 10.0});
    CHECK(after - before == doctest::Approx(std::log(2.0) / (2 * std::numbers::pi)).epsilon(1e-12));
    CHECK(after - before == doctest::Approx(0.1103178).epsilon(1e-5));
    // Degenerate annuli collapse to modulus 0.
    CHECK(annulus_modulus({1.0, 1.0 + 1e-12}) < 1e-11);
    CHECK_THROWS_AS(annulus_modulus({2.0, 1.0}), Error);
    CHECK_THROWS_AS(annulus_modulus({1.0, 1.0}), Error);
}

TEST_CASE("plane vs disc witness sequence") {
    Demonstration demo = plane_vs_disc_demo(1.0, 3);
    REQUIRE(demo.rows.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(demo.rows[k].modulus == doctest::Approx(k + 1.0).epsilon(1e-12));
        AnnulusSpec a{1.0, demo.rows[k].r2};
        CHECK(annulus_modulus(a) == doctest::Approx(demo.rows[k].modulus).epsilon(1e-9));
    }
    // The same contradiction with a 10-quasiconformal map just needs larger radii.
    Demonstration demo10 = plane_vs_disc_demo(10.0, 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(demo10.rows[k].modulus == doctest::Approx(10.0 * (k + 1)).epsilon(1e-12));
        CHECK(demo10.rows[k].image_modulus_lower_bound ==
              doctest::Approx(k + 1.0).epsilon(1e-12));
        CHECK(demo10.rows[k].r2 > demo.rows[k].r2);
    }
    CHECK_THROWS_AS(plane_vs_disc_demo(0.5, 3), Error);
}
