#include "lc/dilatation.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lc {

double dilatation_quotient(const JacobianSample& j) {
    const double det = j.det();
    if (!(det > 0.0))
        throw DegenerateJacobian("dilatation_quotient: Jacobian determinant " +
                                 std::to_string(det) + " is not positive (not sense-preserving)");
    // K - 1 = ((ux - vy)^2 + (uy + vx)^2) / (2 det): the same K as
    // (ux^2 + uy^2 + vx^2 + vy^2) / (2 det), factored so conformal samples
    // give exactly zero instead of a catastrophic cancellation under the sqrt.
    const double km1 =
        0.5 * ((j.ux - j.vy) * (j.ux - j.vy) + (j.uy + j.vx) * (j.uy + j.vx)) / det;
    const double k = 1.0 + km1;
    return k + std::sqrt(km1 * (k + 1.0));
}

GridDilatation grid_dilatation(const std::vector<std::vector<JacobianSample>>& grid) {
    if (grid.empty() || grid.front().empty()) throw Error("grid_dilatation: empty grid");
    GridDilatation out;
    out.rows = grid.size();
    out.cols = grid.front().size();
    out.field.reserve(out.rows * out.cols);
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (grid[r].size() != out.cols) throw Error("grid_dilatation: ragged grid");
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            double d;
            try {
                d = dilatation_quotient(grid[r][c]);
            } catch (const DegenerateJacobian& e) {
                throw DegenerateJacobian("cell (" + std::to_string(r) + ", " + std::to_string(c) +
                                         "): " + e.what());
            }
            out.field.push_back(d);
            out.max_d = std::max(out.max_d, d);
        }
    }
    return out;
}

void AnnulusSpec::check() const {
    if (!(0.0 < r1 && r1 < r2))
        throw Error("annulus: need 0 < r1 < r2, got r1 = " + std::to_string(r1) +
                    ", r2 = " + std::to_string(r2));
}

double annulus_modulus(const AnnulusSpec& a) {
    a.check();
    return std::log(a.r2 / a.r1) / (2.0 * std::numbers::pi);
}

Demonstration plane_vs_disc_demo(double K, int rows, double r1, double disc_bound) {
    if (K < 1.0) throw Error("plane_vs_disc_demo: K must be >= 1");
    if (rows < 1) throw Error("plane_vs_disc_demo: need at least one row");
    if (!(r1 > 0.0)) throw Error("plane_vs_disc_demo: r1 must be positive");
    Demonstration demo;
    demo.K = K;
    demo.disc_bound = disc_bound;
    for (int k = 1; k <= rows; ++k) {
        Demonstration::Row row;
        row.modulus = K * (disc_bound + k);
        row.r2 = r1 * std::exp(2.0 * std::numbers::pi * row.modulus);
        row.image_modulus_lower_bound = disc_bound + k;
        demo.rows.push_back(row);
    }
    return demo;
}

}  // namespace lc
