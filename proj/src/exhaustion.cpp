#include "lc/exhaustion.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace lc {

namespace {

// Face-size memo shared across the vertices of one exhaustion: walking the
// orbit of one dart settles every dart on that face.
struct FaceSizeCache {
    struct Entry {
        bool infinite = false;
        bool truncated = false;
        std::uint64_t m = 1;
    };
    std::unordered_map<Dart, Entry, DartHash> known;

    Entry face_size(const LocalRule& rule, Dart start, std::uint64_t cap) {
        auto hit = known.find(start);
        if (hit != known.end()) return hit->second;

        const std::uint32_t q = static_cast<std::uint32_t>(rule.q());
        std::vector<Dart> walked;
        Dart d = start;
        Entry e;
        while (true) {
            Dart m;
            try {
                m = rule.mate(d.v, d.slot);
                Dart back = rule.mate(m.v, m.slot);
                if (!(back == d))
                    throw RuleInconsistent("rule mate() is not an involution during face walk");
            } catch (const AddressSpaceExceeded&) {
                e.infinite = true;
                e.truncated = true;
                break;
            }
            walked.push_back(d);
            d = Dart{m.v, (m.slot + 1) % q};
            if (d == start) {
                e.m = walked.size() / 2;
                break;
            }
            if (walked.size() >= cap) {
                e.infinite = true;
                e.truncated = true;
                break;
            }
        }
        for (const Dart& w : walked) known.emplace(w, e);
        return e;
    }
};

void finish_report(ExhaustionReport& rep, std::uint64_t window) {
    rep.effective_depth = rep.v_nu.size();
    if (rep.v_nu.empty()) return;
    std::uint64_t w = window == 0 ? std::max<std::uint64_t>(1, rep.effective_depth / 4) : window;
    w = std::min<std::uint64_t>(w, rep.effective_depth);
    rep.tail_window_size = w;
    rep.tail_min = rep.v_nu.back();
    rep.tail_max = rep.v_nu.back();
    for (std::size_t i = rep.v_nu.size() - w; i < rep.v_nu.size(); ++i) {
        rep.tail_min = std::min(rep.tail_min, rep.v_nu[i]);
        rep.tail_max = std::max(rep.tail_max, rep.v_nu[i]);
    }
}

void note_vp(ExhaustionReport& rep, const Rational& vp) {
    if (std::find(rep.vp_distinct.begin(), rep.vp_distinct.end(), vp) == rep.vp_distinct.end())
        rep.vp_distinct.push_back(vp);
}

ExhaustionReport exhaust_by_census(const LocalRule& rule, const ShellCensus& census,
                                   std::uint64_t depth, const ExhaustOptions& opts) {
    ExhaustionReport rep;
    rep.base = rule.base();
    rep.depth = depth;

    // Shell 0: the base vertex. Its V_P comes from the census convention that
    // shells carry exact ramification; compute it directly via lazy tracing
    // with a small cap (census-backed rules have bigon-or-infinite faces).
    FaceSizeCache cache;
    const std::uint64_t base_cap = 2 * rule.q() + 2;
    Rational base_vp = 0;
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rule.q()); ++s) {
        auto e = cache.face_size(rule, Dart{rule.base(), s}, base_cap);
        base_vp += e.infinite ? Rational(1) : Rational(1) - Rational(BigInt(1), BigInt(e.m));
    }
    note_vp(rep, base_vp);

    BigInt count = 1;
    Rational total = base_vp;
    for (std::uint64_t nu = 1; nu <= depth; ++nu) {
        GenerationSlice slice = census.shell(nu);
        count += slice.vertex_count;
        total += slice.ramification_sum;
        for (const Rational& vp : slice.vp_values) note_vp(rep, vp);
        rep.n_nu.push_back(count);
        rep.v_nu.push_back(total / Rational(count));
        rep.e_nu.push_back(Rational(2) - rep.v_nu.back());
    }
    finish_report(rep, opts.window);
    return rep;
}

}  // namespace

ExhaustionReport wreath_exhaust(const LocalRule& rule, VertexId base, std::uint64_t depth,
                                const ExhaustOptions& opts) {
    if (depth < 1) throw Error("wreath_exhaust: depth must be >= 1");

    if (opts.allow_census && base == rule.base()) {
        if (const ShellCensus* census = rule.shell_census())
            return exhaust_by_census(rule, *census, depth, opts);
    }

    ExhaustionReport rep;
    rep.base = base;
    rep.depth = depth;

    const std::uint32_t q = static_cast<std::uint32_t>(rule.q());
    FaceSizeCache cache;

    std::unordered_set<VertexId> seen{base};
    std::vector<VertexId> frontier{base};
    std::uint64_t total_vertices = 1;

    const bool small_cap_ok = rule.all_faces_known_infinite_or_bigon();
    auto effective_cap = [&](std::uint64_t n_now) -> std::uint64_t {
        if (small_cap_ok) return 2 * q + 2;
        if (opts.cap != 0) return opts.cap;
        return std::max<std::uint64_t>(64, 10 * static_cast<std::uint64_t>(q) * n_now);
    };

    auto vp_of = [&](VertexId v, std::uint64_t cap) {
        Rational vp = 0;
        for (std::uint32_t s = 0; s < q; ++s) {
            auto e = cache.face_size(rule, Dart{v, s}, cap);
            if (e.truncated) rep.cap_truncations = true;
            vp += e.infinite ? Rational(1) : Rational(1) - Rational(BigInt(1), BigInt(e.m));
        }
        return vp;
    };

    Rational total = vp_of(base, effective_cap(1));
    note_vp(rep, total);

    for (std::uint64_t nu = 1; nu <= depth; ++nu) {
        std::vector<VertexId> next;
        for (VertexId v : frontier) {
            for (std::uint32_t s = 0; s < q; ++s) {
                const Dart m = rule.mate(v, s);
                if (seen.insert(m.v).second) next.push_back(m.v);
            }
        }
        if (next.empty()) {
            rep.exhausted = true;
            break;
        }
        total_vertices += next.size();
        if (total_vertices > opts.max_vertices)
            throw Error("wreath_exhaust: vertex budget exceeded at generation " +
                        std::to_string(nu) + " (no census available for this rule)");
        const std::uint64_t cap = effective_cap(total_vertices);
        for (VertexId v : next) {
            Rational vp = vp_of(v, cap);
            note_vp(rep, vp);
            total += vp;
        }
        rep.n_nu.push_back(BigInt(total_vertices));
        rep.v_nu.push_back(total / Rational(BigInt(total_vertices)));
        rep.e_nu.push_back(Rational(2) - rep.v_nu.back());
        frontier = std::move(next);
    }
    finish_report(rep, opts.window);
    return rep;
}

const char* to_string(LimitEstimate::Verdict v) {
    switch (v) {
        case LimitEstimate::Verdict::Converged: return "CONVERGED";
        case LimitEstimate::Verdict::Oscillating: return "OSCILLATING";
        case LimitEstimate::Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

LimitEstimate limit_estimate(const ExhaustionReport& r, std::uint64_t window,
                             const Rational& tolerance) {
    if (r.v_nu.empty()) throw Error("limit_estimate: empty report");
    if (window < 1 || window > r.effective_depth)
        throw Error("limit_estimate: window must be in 1..depth");

    LimitEstimate est;
    const std::size_t begin = r.v_nu.size() - window;
    est.lim_inf_est = r.v_nu[begin];
    est.lim_sup_est = r.v_nu[begin];
    for (std::size_t i = begin; i < r.v_nu.size(); ++i) {
        est.lim_inf_est = std::min(est.lim_inf_est, r.v_nu[i]);
        est.lim_sup_est = std::max(est.lim_sup_est, r.v_nu[i]);
    }

    if (est.lim_sup_est - est.lim_inf_est < tolerance) {
        est.verdict = LimitEstimate::Verdict::Converged;
        return est;
    }
    // Count direction reversals across the window.
    int reversals = 0;
    int last_sign = 0;
    for (std::size_t i = begin + 1; i < r.v_nu.size(); ++i) {
        const Rational d = r.v_nu[i] - r.v_nu[i - 1];
        const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (sign != 0) {
            if (last_sign != 0 && sign != last_sign) ++reversals;
            last_sign = sign;
        }
    }
    est.verdict = reversals >= 2 ? LimitEstimate::Verdict::Oscillating
                                 : LimitEstimate::Verdict::Inconclusive;
    return est;
}

}  // namespace lc
