#pragma once

#include <cstdint>
#include <vector>

#include "lc/complex_core.hpp"
#include "lc/type_criterion.hpp"

namespace lc {

struct SolverDiverged : Error {
    using Error::Error;
};

// Finite-horizon estimate of the probability that the walk started at the
// base returns to it: a discrete stand-in for the harmonic measure dichotomy
// (return probability 1 on parabolic-like skeletons, < 1 on transient ones).
struct WalkEstimate {
    VertexId base = 0;
    std::uint64_t trials = 0;
    std::uint64_t horizon = 0;
    std::uint64_t seed = 0;
    std::uint64_t returned = 0;
    double return_fraction = 0.0;
    double std_error = 0.0;  // binomial
};

WalkEstimate simulate_walk(const LocalRule& rule, std::uint64_t trials, std::uint64_t horizon,
                           std::uint64_t seed);

// Effective resistance from the base to the grounded nu-sphere, unit
// conductance per edge (parallel strands add). Solved via conjugate gradients
// on the graph Laplacian of the ball, warm-started depth to depth.
struct ResistanceCurve {
    std::vector<std::uint64_t> depths;
    std::vector<double> resistance;
    double solver_tolerance = 1e-9;
};

struct ResistanceOptions {
    std::uint64_t stride = 1;            // evaluate every stride-th depth
    std::uint64_t max_vertices = 2'000'000;
    double tolerance = 1e-9;
};

ResistanceCurve effective_resistance(const LocalRule& rule, std::uint64_t depth,
                                     const ResistanceOptions& opts = {});

// Reads the growth of the resistance curve: geometrically decaying increments
// signal a finite limit (transient skeleton, hyperbolic proxy); increments
// bounded below signal unbounded resistance (recurrent skeleton, parabolic
// proxy). Every verdict is labeled as a 1-skeleton proxy.
TypeVerdict oracle_verdict(const ResistanceCurve& curve);

}  // namespace lc
