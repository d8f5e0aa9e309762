#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lc/complex_core.hpp"
#include "lc/exhaustion.hpp"
#include "lc/rational.hpp"
#include "lc/rules.hpp"

namespace lc {

struct InfiniteChainDetected : Error {
    std::uint64_t bound;
    explicit InfiniteChainDetected(std::uint64_t b)
        : Error("unbranched chain exceeded bound " + std::to_string(b)), bound(b) {}
};

struct NotRegular : Error {
    using Error::Error;
};

enum class SurfaceType { Hyperbolic, Parabolic, Elliptic, Inconclusive };
const char* to_string(SurfaceType t);

struct TypeVerdict {
    SurfaceType value = SurfaceType::Inconclusive;
    std::string basis;     // which rule fired (or why none did)
    std::string evidence;  // numbers used
};

// The three admission conditions for the chain criterion: (1) no algebraic
// branch point (every face a bigon or infinite), (2) no infinite unbranched
// chain, (3) contracted branching degree 2 or q everywhere. Condition (2) can
// only be certified up to a bound.
struct ConditionsReport {
    bool no_algebraic = true;
    bool no_infinite_unbranched_chain = true;
    bool degrees_two_or_q = true;
    std::uint64_t certified_bound = 0;
    std::vector<std::string> witnesses;

    bool all_hold() const {
        return no_algebraic && no_infinite_unbranched_chain && degrees_two_or_q;
    }
};

// Generation data over the Speiser tree: B_k branch vertices, chain lengths
// from B_{k-1} to B_k, phi(k) their maximum, psi(k) the running maximum, and
// exact partial sums S_K = sum_{k<=K} psi(k)/k^2.
struct ChainProfile {
    int q = 0;
    std::uint64_t K = 0;
    std::vector<BigInt> b_counts;                         // |B_k|, k = 0..K
    std::vector<std::vector<std::uint64_t>> chain_lengths;  // k = 1..K, sorted
    std::vector<std::uint64_t> phi;                       // k = 1..K
    std::vector<std::uint64_t> psi;                       // k = 1..K
    std::vector<Rational> partial_sums;                   // S_1..S_K
    std::optional<ChainBound> declared;                   // carried from the rule
};

// Contracted view of the rule: branch vertices joined by weighted edges. Uses
// the structured view when the rule provides one, otherwise walks chains
// explicitly (throws InfiniteChainDetected past chain_bound).
std::shared_ptr<const SpeiserView> to_speiser_tree(const std::shared_ptr<const LocalRule>& rule,
                                                   std::uint64_t chain_bound);

// Re-inserts weighted chains as alternating single-edge / (q-1)-bundle runs
// and returns the ball of the expansion; the round-trip with to_speiser_tree
// restores the original complex on any finite ball.
Ball expand_to_ball(const SpeiserView& view, std::uint64_t radius, Color base_color = Color::Inner);

ConditionsReport check_conditions(const LocalRule& rule, std::uint64_t bound,
                                  std::uint64_t face_cap = 0);

ChainProfile chain_profile(const SpeiserView& view, std::uint64_t K,
                           const std::optional<ChainBound>& declared = std::nullopt);

ChainProfile chain_profile(const std::shared_ptr<const LocalRule>& rule, std::uint64_t K,
                           std::uint64_t chain_bound);

// One-directional series criterion: convergence of sum psi(k)/k^2 certifies
// the hyperbolic type; divergence proves nothing. Accepted certificates are a
// declared closed-form bound validated against the observed profile, or psi
// observed stable over the trailing half of the horizon.
TypeVerdict teichmueller_verdict(const ChainProfile& profile, std::uint64_t divergence_horizon);

// Regular trichotomy: for surfaces with V_P constant, the sign of V - 2
// decides the type. classify_regular(report) checks the certificate.
TypeVerdict classify_regular(const Rational& V);
TypeVerdict classify_regular(const ExhaustionReport& report);

struct ConjectureAssessment {
    enum class Outcome { Confirms, Refutes, NotApplicable, Inconclusive };
    Outcome outcome = Outcome::Inconclusive;
    std::string detail;
};
const char* to_string(ConjectureAssessment::Outcome o);

// Confronts the mean-excess prediction (E = 0: parabolic, E < 0: hyperbolic)
// with an independently obtained verdict. A refutation needs E ~ 0 with a
// hyperbolic verdict, or E < 0 with a parabolic one.
ConjectureAssessment nevanlinna_conjecture_eval(const ExhaustionReport& report,
                                                const TypeVerdict& verdict,
                                                std::uint64_t window = 0,
                                                const Rational& zero_band = Rational(1, 100));

// Family of surfaces disproving the mean-excess conjecture: chain lengths grow
// like gauge * ceil(sqrt(k)), so bigon chains dominate every generation
// (V_nu -> 2) while sum psi(k)/k^2 still converges. gauge == 0 degenerates to
// constant chains of length c (c == 1: the plain q-regular tree). The returned
// rule is verified at construction; ScheduleInvalid reports a failed check.
std::shared_ptr<ChainTreeRule> counterexample_family(int q, std::uint64_t chain_length,
                                                     std::uint64_t gauge = 96);

}  // namespace lc
