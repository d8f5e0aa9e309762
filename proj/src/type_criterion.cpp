#include "lc/type_criterion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lc {

namespace {

constexpr double kZeta2 = 1.6449340668482264;  // pi^2/6

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r << " (~" << to_double(r) << ")";
    return os.str();
}

// Face-size walk identical in semantics to face_of, but returning the visited
// darts so results can be memoized per face.
struct FaceProbe {
    bool bigon = false;
    bool infinite = false;
    std::uint64_t m = 1;
};

class FaceCache {
public:
    FaceProbe probe(const LocalRule& rule, Dart start, std::uint64_t cap) {
        auto hit = cache_.find(start);
        if (hit != cache_.end()) return hit->second;
        const std::uint32_t q = static_cast<std::uint32_t>(rule.q());
        std::vector<Dart> walked;
        FaceProbe p;
        Dart d = start;
        while (true) {
            Dart m;
            try {
                m = rule.mate(d.v, d.slot);
            } catch (const AddressSpaceExceeded&) {
                p.infinite = true;  // did not close within the addressable horizon
                break;
            }
            walked.push_back(d);
            d = Dart{m.v, (m.slot + 1) % q};
            if (d == start) {
                p.m = walked.size() / 2;
                p.bigon = (p.m == 1);
                break;
            }
            if (walked.size() >= cap) {
                p.infinite = true;
                break;
            }
        }
        for (const Dart& w : walked) cache_.emplace(w, p);
        return p;
    }

private:
    std::unordered_map<Dart, FaceProbe, DartHash> cache_;
};

std::uint64_t face_walk_cap(const LocalRule& rule, std::uint64_t requested,
                            std::uint64_t context_size) {
    if (rule.all_faces_known_infinite_or_bigon())
        return 2 * static_cast<std::uint64_t>(rule.q()) + 2;
    if (requested != 0) return requested;
    return std::max<std::uint64_t>(64, 10 * static_cast<std::uint64_t>(rule.q()) * context_size);
}

// A face that has not closed within 2q + 4 steps is certainly not a bigon, so
// branching degrees never need deep walks.
std::uint64_t degree_cap(const LocalRule& rule) {
    return 2 * static_cast<std::uint64_t>(rule.q()) + 4;
}

// Number of the q face corners at v lying on non-bigon faces. Chain interiors
// have exactly two, branch vertices q.
std::uint32_t branching_degree(const LocalRule& rule, VertexId v, FaceCache& cache) {
    std::uint32_t deg = 0;
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rule.q()); ++s)
        if (!cache.probe(rule, Dart{v, s}, degree_cap(rule)).bigon) ++deg;
    return deg;
}

struct ChainWalk {
    VertexId end = 0;
    std::uint64_t length = 0;      // vertex hops from the starting branch vertex
    std::uint32_t arriving_slot = 0;
    bool exceeded = false;
    bool closed = false;  // returned to the starting vertex
};

// Follows the unbranched chain leaving `from` through slot `slot` until a
// vertex of branching degree != 2 is reached.
ChainWalk walk_chain(const LocalRule& rule, VertexId from, std::uint32_t slot,
                     std::uint64_t bound, FaceCache& cache) {
    ChainWalk w;
    VertexId prev = from;
    Dart at = rule.mate(from, slot);
    w.length = 1;
    while (true) {
        if (branching_degree(rule, at.v, cache) != 2) {
            w.end = at.v;
            w.arriving_slot = at.slot;
            return w;
        }
        if (at.v == from) {
            w.end = at.v;
            w.arriving_slot = at.slot;
            w.closed = true;
            return w;
        }
        if (w.length >= bound) {
            w.exceeded = true;
            w.end = at.v;
            w.arriving_slot = at.slot;
            return w;
        }
        std::optional<std::uint32_t> next_slot;
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rule.q()); ++s) {
            if (rule.mate(at.v, s).v != prev) {
                next_slot = s;
                break;
            }
        }
        if (!next_slot)
            throw Error("chain continuation ambiguous at vertex " + std::to_string(at.v));
        prev = at.v;
        at = rule.mate(at.v, *next_slot);
        ++w.length;
    }
}

// Generic contraction: branch vertices of the rule joined by walked chains.
class ContractedSpeiser : public SpeiserView {
public:
    ContractedSpeiser(std::shared_ptr<const LocalRule> rule, std::uint64_t chain_bound)
        : rule_(std::move(rule)), chain_bound_(chain_bound) {
        base_ = find_base();
    }

    int q() const override { return rule_->q(); }
    VertexId base() const override { return base_; }

    std::vector<SpeiserEdge> neighbors(VertexId v) const override {
        std::lock_guard<std::mutex> lock(mu_);
        auto hit = memo_.find(v);
        if (hit != memo_.end()) return hit->second;
        if (branching_degree(*rule_, v, cache_) != static_cast<std::uint32_t>(rule_->q()))
            throw Error("SpeiserView: vertex " + std::to_string(v) + " is not a branch vertex");
        std::vector<SpeiserEdge> out;
        out.reserve(rule_->q());
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rule_->q()); ++s) {
            ChainWalk w = walk_chain(*rule_, v, s, chain_bound_, cache_);
            if (w.exceeded) throw InfiniteChainDetected(chain_bound_);
            out.push_back(SpeiserEdge{w.end, w.length, w.arriving_slot});
        }
        memo_.emplace(v, out);
        return out;
    }

private:
    VertexId find_base() {
        // Nearest branch vertex to the rule base, BFS order. A branch vertex
        // needs q >= 3 directions; a 2-homogeneous complex is all chain.
        if (rule_->q() < 3) throw InfiniteChainDetected(chain_bound_);
        std::unordered_set<VertexId> seen{rule_->base()};
        std::deque<std::pair<VertexId, std::uint64_t>> queue{{rule_->base(), 0}};
        while (!queue.empty()) {
            auto [v, d] = queue.front();
            queue.pop_front();
            if (branching_degree(*rule_, v, cache_) == static_cast<std::uint32_t>(rule_->q()))
                return v;
            if (d >= chain_bound_) continue;
            for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rule_->q()); ++s) {
                VertexId w = rule_->mate(v, s).v;
                if (seen.insert(w).second) queue.emplace_back(w, d + 1);
            }
        }
        throw InfiniteChainDetected(chain_bound_);
    }

    std::shared_ptr<const LocalRule> rule_;
    std::uint64_t chain_bound_;
    VertexId base_ = 0;
    mutable std::mutex mu_;
    mutable FaceCache cache_;
    mutable std::unordered_map<VertexId, std::vector<SpeiserEdge>> memo_;
};

}  // namespace

const char* to_string(SurfaceType t) {
    switch (t) {
        case SurfaceType::Hyperbolic: return "HYPERBOLIC";
        case SurfaceType::Parabolic: return "PARABOLIC";
        case SurfaceType::Elliptic: return "ELLIPTIC";
        case SurfaceType::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

const char* to_string(ConjectureAssessment::Outcome o) {
    switch (o) {
        case ConjectureAssessment::Outcome::Confirms: return "CONFIRMS";
        case ConjectureAssessment::Outcome::Refutes: return "REFUTES";
        case ConjectureAssessment::Outcome::NotApplicable: return "NOT_APPLICABLE";
        case ConjectureAssessment::Outcome::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::shared_ptr<const SpeiserView> to_speiser_tree(const std::shared_ptr<const LocalRule>& rule,
                                                   std::uint64_t chain_bound) {
    if (auto structured = rule->speiser_view()) return structured;
    return std::make_shared<ContractedSpeiser>(rule, chain_bound);
}

ConditionsReport check_conditions(const LocalRule& rule, std::uint64_t bound,
                                  std::uint64_t face_cap) {
    if (bound < 1) throw Error("check_conditions: bound must be >= 1");
    ConditionsReport rep;
    rep.certified_bound = bound;

    Ball ball = materialize(rule, bound, 2'000'000);
    const std::uint64_t cap = face_walk_cap(rule, face_cap, ball.size());
    const std::uint32_t q = static_cast<std::uint32_t>(rule.q());
    FaceCache cache;
    FaceCache algebraic_cache;  // deeper walks, separate memo

    std::vector<std::uint32_t> degree(ball.size(), 0);
    for (std::size_t i = 0; i < ball.size(); ++i) {
        const VertexId v = ball.rule_id[i];
        for (std::uint32_t s = 0; s < q; ++s) {
            FaceProbe p = algebraic_cache.probe(rule, Dart{v, s}, cap);
            if (!p.bigon) ++degree[i];
            if (!p.bigon && !p.infinite && rep.no_algebraic) {
                rep.no_algebraic = false;
                rep.witnesses.push_back("vertex " + std::to_string(v) + " lies on a " +
                                        std::to_string(2 * p.m) + "-gon (algebraic branch point of order " +
                                        std::to_string(p.m - 1) + ")");
            }
        }
        if (degree[i] != 2 && degree[i] != q && rep.degrees_two_or_q) {
            rep.degrees_two_or_q = false;
            rep.witnesses.push_back("vertex " + std::to_string(v) + " has branching degree " +
                                    std::to_string(degree[i]) + ", expected 2 or q = " +
                                    std::to_string(q));
        }
    }

    // Condition (2), certified up to `bound`: every chain reachable from a
    // branch vertex in the ball must close at a branch vertex within bound
    // steps; if the ball shows no branch vertex at all, the base chain itself
    // is the witness.
    bool branch_seen = false;
    for (std::size_t i = 0; i < ball.size() && rep.no_infinite_unbranched_chain; ++i) {
        if (degree[i] != q || q < 3) continue;
        branch_seen = true;
        for (std::uint32_t s = 0; s < q; ++s) {
            ChainWalk w = walk_chain(rule, ball.rule_id[i], s, bound, cache);
            if (w.exceeded) {
                rep.no_infinite_unbranched_chain = false;
                rep.witnesses.push_back("chain from vertex " + std::to_string(ball.rule_id[i]) +
                                        " slot " + std::to_string(s) + " exceeds " +
                                        std::to_string(bound) + " edges without a branch vertex");
                break;
            }
        }
    }
    if (!branch_seen && rep.no_infinite_unbranched_chain) {
        if (q >= 3 || !ball.complete) {
            if (branching_degree(rule, rule.base(), cache) == 2) {
                ChainWalk w = walk_chain(rule, rule.base(), 0, bound, cache);
                if (w.exceeded || w.closed) {
                    rep.no_infinite_unbranched_chain = false;
                    rep.witnesses.push_back(w.closed
                                                ? "closed unbranched chain through the base"
                                                : "chain through the base exceeds " +
                                                      std::to_string(bound) +
                                                      " edges without a branch vertex");
                }
            }
        }
    }
    return rep;
}

ChainProfile chain_profile(const SpeiserView& view, std::uint64_t K,
                           const std::optional<ChainBound>& declared) {
    if (K < 1) throw Error("chain_profile: K must be >= 1");
    ChainProfile prof;
    prof.q = view.q();
    prof.K = K;
    prof.declared = declared;
    prof.b_counts.push_back(1);

    struct NodeRef {
        VertexId id;
        std::uint32_t parent_dir;
        bool has_parent;
    };
    std::vector<NodeRef> generation{{view.base(), 0, false}};
    std::unordered_set<VertexId> seen{view.base()};

    Rational partial = 0;
    std::uint64_t psi = 0;
    for (std::uint64_t k = 1; k <= K; ++k) {
        std::vector<NodeRef> next;
        std::vector<std::uint64_t> lengths;
        for (const NodeRef& node : generation) {
            const auto edges = view.neighbors(node.id);
            for (std::uint32_t dir = 0; dir < edges.size(); ++dir) {
                if (node.has_parent && dir == node.parent_dir) continue;
                const SpeiserEdge& e = edges[dir];
                if (!seen.insert(e.to).second)
                    throw Error("chain_profile: contracted view is not a tree (revisited vertex " +
                                std::to_string(e.to) + ")");
                lengths.push_back(e.weight);
                next.push_back(NodeRef{e.to, e.back_dir, true});
            }
        }
        std::sort(lengths.begin(), lengths.end());
        const std::uint64_t phi = lengths.empty() ? 0 : lengths.back();
        psi = std::max(psi, phi);
        partial += Rational(BigInt(psi), BigInt(k) * BigInt(k));
        prof.b_counts.push_back(BigInt(next.size()));
        prof.chain_lengths.push_back(std::move(lengths));
        prof.phi.push_back(phi);
        prof.psi.push_back(psi);
        prof.partial_sums.push_back(partial);
        generation = std::move(next);
    }
    return prof;
}

ChainProfile chain_profile(const std::shared_ptr<const LocalRule>& rule, std::uint64_t K,
                           std::uint64_t chain_bound) {
    auto view = to_speiser_tree(rule, chain_bound);
    return chain_profile(*view, K, rule->declared_chain_bound());
}

TypeVerdict teichmueller_verdict(const ChainProfile& profile, std::uint64_t divergence_horizon) {
    TypeVerdict verdict;
    if (profile.K < divergence_horizon) {
        verdict.basis = "series criterion: profile depth " + std::to_string(profile.K) +
                        " below requested horizon " + std::to_string(divergence_horizon);
        return verdict;
    }
    const std::uint64_t K = profile.K;
    std::ostringstream ev;
    ev << "S_" << K << " = " << to_double(profile.partial_sums.back());

    if (profile.declared) {
        for (std::uint64_t k = 1; k <= K; ++k) {
            if (profile.psi[k - 1] > profile.declared->at(k))
                throw Error("teichmueller_verdict: observed psi(" + std::to_string(k) +
                            ") = " + std::to_string(profile.psi[k - 1]) +
                            " violates the declared bound (internal inconsistency)");
        }
        verdict.value = SurfaceType::Hyperbolic;
        verdict.basis = "series criterion: declared chain bound, " + profile.declared->description;
        ev << "; declared sum bound " << profile.declared->series_sum_bound;
        verdict.evidence = ev.str();
        return verdict;
    }

    const std::uint64_t half = std::max<std::uint64_t>(1, K / 2);
    if (profile.psi[K - 1] == profile.psi[half - 1]) {
        const std::uint64_t psi_max = profile.psi[K - 1];
        verdict.value = SurfaceType::Hyperbolic;
        verdict.basis = "series criterion: psi stable at " + std::to_string(psi_max) +
                        " over the trailing half (certified to K = " + std::to_string(K) + ")";
        ev << "; S_inf <= " << psi_max << " * pi^2/6 = "
           << static_cast<double>(psi_max) * kZeta2;
        verdict.evidence = ev.str();
        return verdict;
    }

    verdict.basis = "series criterion: psi(k) still growing at the horizon; "
                    "the criterion gives no verdict on divergence";
    verdict.evidence = ev.str();
    return verdict;
}

TypeVerdict classify_regular(const Rational& V) {
    TypeVerdict verdict;
    verdict.basis = "regular trichotomy";
    verdict.evidence = "V = " + rat_str(V) + ", E = " + rat_str(Rational(2) - V);
    if (V < 2)
        verdict.value = SurfaceType::Elliptic;
    else if (V == 2)
        verdict.value = SurfaceType::Parabolic;
    else
        verdict.value = SurfaceType::Hyperbolic;
    return verdict;
}

TypeVerdict classify_regular(const ExhaustionReport& report) {
    if (!report.regular()) {
        std::ostringstream os;
        os << "classify_regular: surface not regularly ramified; V_P takes "
           << report.vp_distinct.size() << " values:";
        for (const Rational& v : report.vp_distinct) os << ' ' << v;
        throw NotRegular(os.str());
    }
    return classify_regular(report.vp_distinct.front());
}

ConjectureAssessment nevanlinna_conjecture_eval(const ExhaustionReport& report,
                                                const TypeVerdict& verdict,
                                                std::uint64_t window,
                                                const Rational& zero_band) {
    ConjectureAssessment out;
    const std::uint64_t w = window == 0 ? report.tail_window_size : window;
    // Convergence is gated at the assessment's own resolution: the window must
    // be narrower than the band used to call E zero or negative.
    LimitEstimate est = limit_estimate(report, w, zero_band);
    if (est.verdict != LimitEstimate::Verdict::Converged) {
        out.outcome = ConjectureAssessment::Outcome::Inconclusive;
        out.detail = std::string("V_nu estimate not converged (") + to_string(est.verdict) + ")";
        return out;
    }
    const Rational e_lo = Rational(2) - est.lim_sup_est;
    const Rational e_hi = Rational(2) - est.lim_inf_est;
    std::ostringstream detail;
    detail << "E in [" << to_double(e_lo) << ", " << to_double(e_hi) << "] at depth "
           << report.effective_depth;

    auto with_detail = [&](ConjectureAssessment::Outcome o, const std::string& extra) {
        out.outcome = o;
        out.detail = detail.str() + "; " + extra;
        return out;
    };

    const bool e_zero = (e_lo >= -zero_band) && (e_hi <= zero_band);
    const bool e_negative = e_hi < -zero_band;
    const bool e_positive = e_lo > zero_band;

    if (e_zero) {
        if (verdict.value == SurfaceType::Parabolic)
            return with_detail(ConjectureAssessment::Outcome::Confirms,
                               "E = 0 with a parabolic verdict matches the prediction");
        if (verdict.value == SurfaceType::Hyperbolic)
            return with_detail(ConjectureAssessment::Outcome::Refutes,
                               "E = 0 predicts parabolic, but the surface is hyperbolic (" +
                                   verdict.basis + ")");
        return with_detail(ConjectureAssessment::Outcome::Inconclusive,
                           "no independent type verdict available");
    }
    if (e_negative) {
        if (verdict.value == SurfaceType::Hyperbolic)
            return with_detail(ConjectureAssessment::Outcome::Confirms,
                               "E < 0 with a hyperbolic verdict matches the prediction");
        if (verdict.value == SurfaceType::Parabolic)
            return with_detail(ConjectureAssessment::Outcome::Refutes,
                               "E < 0 predicts hyperbolic, but the surface is parabolic");
        return with_detail(ConjectureAssessment::Outcome::Inconclusive,
                           "no independent type verdict available");
    }
    if (e_positive)
        return with_detail(ConjectureAssessment::Outcome::NotApplicable,
                           "E > 0 (V < 2) is outside the conjecture's dichotomy");
    return with_detail(ConjectureAssessment::Outcome::Inconclusive,
                       "E estimate straddles the zero band");
}

std::shared_ptr<ChainTreeRule> counterexample_family(int q, std::uint64_t chain_length,
                                                     std::uint64_t gauge) {
    if (q < 3) throw ScheduleInvalid("counterexample_family: q must be >= 3");
    if (chain_length < 1) throw ScheduleInvalid("counterexample_family: chain_length must be >= 1");

    const ChainSchedule schedule = gauge == 0 ? ChainSchedule::constant(chain_length)
                                              : ChainSchedule::sqrt_growth(chain_length, gauge);
    auto rule = std::make_shared<ChainTreeRule>(q, schedule);

    // The family is accepted only after verifying its defining properties.
    try {
        const std::uint64_t bound = rule->branch_radius(2) + 2;
        ConditionsReport cond = check_conditions(*rule, bound);
        if (!cond.all_hold()) {
            std::string msg = "conditions (1)-(3) failed:";
            for (const auto& w : cond.witnesses) msg += " " + w;
            throw ScheduleInvalid("counterexample_family: " + msg);
        }

        const std::uint64_t kv = 5;
        ChainProfile prof = chain_profile(rule->speiser_view() ? *rule->speiser_view()
                                                               : *to_speiser_tree(rule, bound),
                                          kv, rule->declared_chain_bound());
        for (std::uint64_t k = 1; k <= kv; ++k)
            if (prof.phi[k - 1] != schedule.length(k))
                throw ScheduleInvalid("counterexample_family: observed chain length phi(" +
                                      std::to_string(k) + ") = " + std::to_string(prof.phi[k - 1]) +
                                      " != scheduled " + std::to_string(schedule.length(k)));

        if (gauge >= 1) {
            // Bigon padding must push V_nu toward 2 across generations.
            ExhaustionReport early = wreath_exhaust(*rule, rule->branch_radius(2));
            ExhaustionReport late = wreath_exhaust(*rule, rule->branch_radius(5));
            const Rational d_early = early.v_nu.back() - 2;
            const Rational d_late = late.v_nu.back() - 2;
            if (!(d_late < d_early) || d_late <= 0)
                throw ScheduleInvalid(
                    "counterexample_family: V_nu does not contract toward 2 "
                    "(schedule provides no growing bigon padding)");
        }
    } catch (const InfiniteChainDetected& e) {
        throw ScheduleInvalid(std::string("counterexample_family: ") + e.what());
    }
    return rule;
}

// ---------------------------------------------------------------------------
// Expansion of a Speiser view back into a line complex ball
// ---------------------------------------------------------------------------

namespace {

// Finite region of the expansion: branch vertices and chain interiors get
// dense handles as the tree is explored outward to the requested radius.
class ExpandedRule : public LocalRule {
public:
    ExpandedRule(const SpeiserView& view, std::uint64_t radius, Color base_color)
        : q_(view.q()), base_color_(base_color) {
        const std::uint64_t horizon = radius + 2;
        Node root;
        root.view_id = view.base();
        nodes_.push_back(std::move(root));
        node_of_view_[view.base()] = 0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].dist >= horizon) continue;
            const auto edges = view.neighbors(nodes_[i].view_id);
            if (edges.size() != static_cast<std::size_t>(q_))
                throw Error("expand: branch vertex of contracted degree != q");
            nodes_[i].edge.assign(q_, 0);
            nodes_[i].expanded = true;
            for (std::uint32_t dir = 0; dir < edges.size(); ++dir) {
                if (nodes_[i].has_parent && dir == nodes_[i].parent_dir) {
                    nodes_[i].edge[dir] = nodes_[i].parent_edge;
                    continue;
                }
                const SpeiserEdge& e = edges[dir];
                auto seen = node_of_view_.find(e.to);
                if (seen != node_of_view_.end())
                    throw Error("expand: contracted view is not a tree");
                const std::uint32_t child = static_cast<std::uint32_t>(nodes_.size());
                Node n;
                n.view_id = e.to;
                n.dist = nodes_[i].dist + e.weight;
                n.parent_dir = e.back_dir;
                n.has_parent = true;
                const std::uint32_t edge_id = static_cast<std::uint32_t>(chains_.size());
                chains_.push_back(Chain{static_cast<std::uint32_t>(i), child, dir, e.back_dir,
                                        e.weight, nodes_[i].dist});
                n.parent_edge = edge_id;
                nodes_[i].edge[dir] = edge_id;
                node_of_view_[e.to] = child;
                nodes_.push_back(std::move(n));
            }
        }
    }

    int q() const override { return q_; }
    VertexId base() const override { return encode_node(0); }

    Color color(VertexId v) const override {
        const std::uint64_t d = dist_of(v);
        const bool even = d % 2 == 0;
        return even == (base_color_ == Color::Inner) ? Color::Inner : Color::Outer;
    }

    Dart mate(VertexId v, std::uint32_t slot) const override {
        if (slot >= static_cast<std::uint32_t>(q_)) throw Error("expand: slot out of range");
        if (is_node(v)) {
            const Node& n = nodes_.at(node_index(v));
            if (!n.expanded) throw Error("expand: vertex beyond the expanded horizon");
            const Chain& c = chains_.at(n.edge[slot]);
            const bool toward_child = (c.parent == node_index(v) && c.parent_dir == slot);
            if (c.weight == 1)
                return toward_child ? Dart{encode_node(c.child), c.child_dir}
                                    : Dart{encode_node(c.parent), c.parent_dir};
            return toward_child ? Dart{encode_interior(n.edge[slot], 1), 0}
                                : Dart{encode_interior(n.edge[slot], c.weight - 1), 0};
        }
        const auto [edge_id, pos] = interior_index(v);
        const Chain& c = chains_.at(edge_id);
        const bool odd = pos % 2 == 1;
        if (odd) {
            if (slot == 0)
                return pos == 1 ? Dart{encode_node(c.parent), c.parent_dir}
                                : Dart{encode_interior(edge_id, pos - 1), 0};
            return Dart{encode_interior(edge_id, pos + 1),
                        static_cast<std::uint32_t>(q_ - slot)};
        }
        if (slot == 0)
            return pos == c.weight - 1 ? Dart{encode_node(c.child), c.child_dir}
                                       : Dart{encode_interior(edge_id, pos + 1), 0};
        return Dart{encode_interior(edge_id, pos - 1), static_cast<std::uint32_t>(q_ - slot)};
    }

private:
    struct Node {
        VertexId view_id = 0;
        std::uint64_t dist = 0;
        std::uint32_t parent_dir = 0;
        std::uint32_t parent_edge = 0;
        bool has_parent = false;
        bool expanded = false;
        std::vector<std::uint32_t> edge;  // dir -> chain id
    };
    struct Chain {
        std::uint32_t parent = 0, child = 0;
        std::uint32_t parent_dir = 0, child_dir = 0;
        std::uint64_t weight = 1;
        std::uint64_t parent_dist = 0;
    };

    static bool is_node(VertexId v) { return (v & 1) == 0; }
    static VertexId encode_node(std::uint32_t i) { return static_cast<VertexId>(i) << 1; }
    static std::uint32_t node_index(VertexId v) { return static_cast<std::uint32_t>(v >> 1); }
    static VertexId encode_interior(std::uint32_t edge_id, std::uint64_t pos) {
        return ((static_cast<VertexId>(edge_id) << 24 | pos) << 1) | 1;
    }
    static std::pair<std::uint32_t, std::uint64_t> interior_index(VertexId v) {
        const VertexId payload = v >> 1;
        return {static_cast<std::uint32_t>(payload >> 24), payload & ((1ULL << 24) - 1)};
    }

    std::uint64_t dist_of(VertexId v) const {
        if (is_node(v)) return nodes_.at(node_index(v)).dist;
        const auto [edge_id, pos] = interior_index(v);
        return chains_.at(edge_id).parent_dist + pos;
    }

    int q_;
    Color base_color_;
    std::vector<Node> nodes_;
    std::vector<Chain> chains_;
    std::unordered_map<VertexId, std::uint32_t> node_of_view_;
};

}  // namespace

Ball expand_to_ball(const SpeiserView& view, std::uint64_t radius, Color base_color) {
    ExpandedRule expanded(view, radius, base_color);
    return materialize(expanded, radius);
}

}  // namespace lc
