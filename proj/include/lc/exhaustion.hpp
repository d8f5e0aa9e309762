#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lc/complex_core.hpp"
#include "lc/rational.hpp"

namespace lc {

// Wreathlike exhaustion: Gamma^nu is the ball of radius nu around the base in
// the graph metric. V_nu is the mean of V_P over all vertices of Gamma^nu;
// every vertex carries its full V_P, with faces resolved by lazy tracing.
struct ExhaustionReport {
    VertexId base = 0;
    std::uint64_t depth = 0;            // requested
    std::uint64_t effective_depth = 0;  // last generation computed
    bool exhausted = false;             // finite complex fully consumed

    // Indexed by nu - 1 for nu = 1..effective_depth.
    std::vector<BigInt> n_nu;       // cumulative vertex counts
    std::vector<Rational> v_nu;     // mean ramification of Gamma^nu
    std::vector<Rational> e_nu;     // 2 - V_nu

    std::vector<Rational> vp_distinct;  // distinct V_P values encountered
    bool cap_truncations = false;       // some face sizes certified only up to cap

    // min/max of V_nu over the trailing `tail_window_size` generations.
    std::uint64_t tail_window_size = 0;
    Rational tail_min, tail_max;

    bool regular() const { return vp_distinct.size() == 1; }
};

struct ExhaustOptions {
    std::uint64_t cap = 0;             // 0: automatic (10 * q * current size)
    std::uint64_t max_vertices = 5'000'000;
    std::uint64_t window = 0;          // 0: depth / 4, at least 1
    bool allow_census = true;
};

ExhaustionReport wreath_exhaust(const LocalRule& rule, VertexId base, std::uint64_t depth,
                                const ExhaustOptions& opts = {});

inline ExhaustionReport wreath_exhaust(const LocalRule& rule, std::uint64_t depth,
                                       const ExhaustOptions& opts = {}) {
    return wreath_exhaust(rule, rule.base(), depth, opts);
}

struct LimitEstimate {
    enum class Verdict { Converged, Oscillating, Inconclusive };

    Rational lim_inf_est;
    Rational lim_sup_est;
    Verdict verdict = Verdict::Inconclusive;
};

const char* to_string(LimitEstimate::Verdict v);

// Window diagnostics over the trailing `window` generations. Converged when
// max - min < tolerance; oscillating when the window shows at least two
// direction reversals; otherwise inconclusive (monotone drift).
LimitEstimate limit_estimate(const ExhaustionReport& r, std::uint64_t window,
                             const Rational& tolerance = Rational(1, 1000));

}  // namespace lc
