#include "lc/walk_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace lc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

WalkEstimate simulate_walk(const LocalRule& rule, std::uint64_t trials, std::uint64_t horizon,
                           std::uint64_t seed) {
    if (trials < 1 || horizon < 1) throw Error("simulate_walk: trials and horizon must be >= 1");
    WalkEstimate est;
    est.base = rule.base();
    est.trials = trials;
    est.horizon = horizon;
    est.seed = seed;

    const std::uint32_t q = static_cast<std::uint32_t>(rule.q());
    auto cursor = rule.walk_cursor();
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Per-trial derived seed: trials are independent and order-free.
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(t)));
        cursor->reset();
        for (std::uint64_t step = 0; step < horizon; ++step) {
            cursor->move(static_cast<std::uint32_t>(rng() % q));
            if (cursor->at_base()) {
                ++est.returned;
                break;
            }
        }
    }
    est.return_fraction = static_cast<double>(est.returned) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.return_fraction * (1.0 - est.return_fraction) /
                              static_cast<double>(trials));
    return est;
}

namespace {

// Laplacian CG over the interior of the nu-ball (vertices at distance < nu);
// the nu-sphere is grounded. Every interior vertex of a proper complex has all
// q neighbors inside the ball, so the operator is y = q x - sum of neighbors.
struct BallSolver {
    const Ball& ball;
    std::vector<std::uint32_t> active_until;  // vertex i active iff dist[i] < nu

    explicit BallSolver(const Ball& b) : ball(b) {}

    double solve(std::uint64_t nu, std::vector<double>& x, double tol,
                 std::vector<double>& r, std::vector<double>& p, std::vector<double>& ap) {
        const std::size_t n = ball.size();
        auto active = [&](std::size_t i) { return ball.dist[i] < nu; };

        auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
            const int q = ball.q;
            for (std::size_t i = 0; i < n; ++i) {
                if (!active(i)) {
                    out[i] = 0.0;
                    continue;
                }
                double acc = q * in[i];
                for (std::int64_t j : ball.adj[i]) {
                    if (j >= 0 && active(static_cast<std::size_t>(j)))
                        acc -= in[static_cast<std::size_t>(j)];
                }
                out[i] = acc;
            }
        };

        for (std::size_t i = 0; i < n; ++i)
            if (!active(i)) x[i] = 0.0;

        // r = b - A x, b = e_base.
        apply(x, r);
        for (std::size_t i = 0; i < n; ++i) r[i] = -r[i];
        r[0] += 1.0;
        p = r;
        double rr = 0.0;
        for (std::size_t i = 0; i < n; ++i) rr += r[i] * r[i];

        const double target = tol * tol;  // ||b|| = 1
        const std::size_t max_iter = 60 * n + 2000;
        for (std::size_t it = 0; it < max_iter && rr > target; ++it) {
            apply(p, ap);
            double pap = 0.0;
            for (std::size_t i = 0; i < n; ++i) pap += p[i] * ap[i];
            if (pap <= 0.0) throw SolverDiverged("resistance solve: operator not positive definite");
            const double alpha = rr / pap;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] += alpha * p[i];
                r[i] -= alpha * ap[i];
            }
            double rr_next = 0.0;
            for (std::size_t i = 0; i < n; ++i) rr_next += r[i] * r[i];
            const double beta = rr_next / rr;
            rr = rr_next;
            for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        }
        if (rr > target)
            throw SolverDiverged("resistance solve: residual " + std::to_string(std::sqrt(rr)) +
                                 " above tolerance at depth " + std::to_string(nu));
        return x[0];
    }
};

}  // namespace

ResistanceCurve effective_resistance(const LocalRule& rule, std::uint64_t depth,
                                     const ResistanceOptions& opts) {
    if (depth < 1) throw Error("effective_resistance: depth must be >= 1");
    const std::uint64_t stride = std::max<std::uint64_t>(1, opts.stride);

    Ball ball = materialize(rule, depth, opts.max_vertices);
    // If the vertex budget truncated discovery, only depths whose spheres were
    // fully discovered are usable (BFS completes layer d before starting d+1).
    std::uint64_t usable = depth;
    if (ball.budget_hit) {
        std::uint64_t max_dist = 0;
        for (std::uint64_t d : ball.dist) max_dist = std::max(max_dist, d);
        usable = max_dist > 0 ? max_dist - 1 : 0;
    }
    if (usable < 1) throw Error("effective_resistance: vertex budget too small for depth 1");

    ResistanceCurve curve;
    curve.solver_tolerance = opts.tolerance;
    BallSolver solver(ball);
    std::vector<double> x(ball.size(), 0.0), r(ball.size()), p(ball.size()), ap(ball.size());
    double prev = 0.0;
    for (std::uint64_t nu = 1; nu <= usable; ++nu) {
        if (nu != usable && (nu % stride) != 0) continue;
        const double res = solver.solve(nu, x, opts.tolerance, r, p, ap);
        if (!curve.resistance.empty() && res < prev - 1e-7)
            throw SolverDiverged("resistance decreased with depth (solver failure)");
        curve.depths.push_back(nu);
        curve.resistance.push_back(res);
        prev = res;
    }
    return curve;
}

TypeVerdict oracle_verdict(const ResistanceCurve& curve) {
    if (curve.depths.size() < 3)
        throw Error("oracle_verdict: need a curve over at least 3 depths");

    const std::size_t n = curve.resistance.size();
    std::vector<double> inc(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        inc[i] = curve.resistance[i + 1] - curve.resistance[i];

    const std::size_t third = std::max<std::size_t>(1, inc.size() / 3);
    double head = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < third; ++i) head += inc[i];
    for (std::size_t i = inc.size() - third; i < inc.size(); ++i) tail += inc[i];

    TypeVerdict verdict;
    std::ostringstream ev;
    ev.precision(10);
    ev << "R(" << curve.depths.back() << ") = " << curve.resistance.back()
       << ", head increment sum " << head << ", tail increment sum " << tail;
    verdict.evidence = ev.str();

    const double scale = std::max(curve.resistance.back(), 1e-12);
    if (head <= 1e-12 * scale) {
        // No early growth to compare against; flat curves read as converged.
        verdict.value = SurfaceType::Hyperbolic;
        verdict.basis = "oracle (1-skeleton proxy): resistance flat (bounded)";
        return verdict;
    }
    const double ratio = tail / head;
    if (ratio < 0.5) {
        verdict.value = SurfaceType::Hyperbolic;
        verdict.basis = "oracle (1-skeleton proxy): resistance increments decay "
                        "(tail/head = " + std::to_string(ratio) + " < 0.5), bounded resistance";
    } else if (ratio > 0.8) {
        verdict.value = SurfaceType::Parabolic;
        verdict.basis = "oracle (1-skeleton proxy): resistance increments bounded below "
                        "(tail/head = " + std::to_string(ratio) + " > 0.8), unbounded resistance";
    } else {
        verdict.value = SurfaceType::Inconclusive;
        verdict.basis = "oracle (1-skeleton proxy): increment trend ambiguous (tail/head = " +
                        std::to_string(ratio) + ")";
    }
    return verdict;
}

}  // namespace lc
