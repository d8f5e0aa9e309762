#pragma once

#include <cstddef>
#include <vector>

#include "lc/complex_core.hpp"

namespace lc {

struct DegenerateJacobian : Error {
    using Error::Error;
};

// Partial derivatives of x + iy -> u + iv at a point. Sense-preserving
// samples have positive determinant.
struct JacobianSample {
    double ux = 1, uy = 0, vx = 0, vy = 1;

    double det() const { return ux * vy - vx * uy; }
};

// D = K + sqrt(K^2 - 1) with K = (ux^2 + uy^2 + vx^2 + vy^2) / (2 det):
// the ratio of the axes of the image ellipse of an infinitesimal circle.
// D >= 1, with equality exactly at conformal points.
double dilatation_quotient(const JacobianSample& j);

struct GridDilatation {
    double max_d = 1.0;
    std::size_t rows = 0, cols = 0;
    std::vector<double> field;  // row-major
};

// Supremum of D over a sample grid: the map is K-quasiconformal on the grid
// for K = max_d.
GridDilatation grid_dilatation(const std::vector<std::vector<JacobianSample>>& grid);

struct AnnulusSpec {
    double r1 = 1, r2 = 2;

    void check() const;
};

// Conformal modulus log(r2/r1) / (2 pi) of the round annulus r1 < |z| < r2.
double annulus_modulus(const AnnulusSpec& a);

// Witness sequence for the plane/disc inequivalence argument: annuli with
// modulus K * (disc_bound + k) whose images under a K-quasiconformal map of
// the plane into the disc would need modulus >= disc_bound + k, exceeding any
// fixed bound a bounded image can satisfy.
struct Demonstration {
    double K = 1;
    double disc_bound = 0;
    struct Row {
        double r2 = 0;
        double modulus = 0;
        double image_modulus_lower_bound = 0;  // modulus / K
    };
    std::vector<Row> rows;
};

Demonstration plane_vs_disc_demo(double K, int rows = 3, double r1 = 1.0,
                                 double disc_bound = 0.0);

}  // namespace lc
