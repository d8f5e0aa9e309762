#include "lc/complex_core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lc {

std::size_t LineComplex::edge_count() const {
    std::size_t ends = 0;
    for (const auto& r : rot) ends += r.size();
    return ends / 2;
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) os << "\n  - " << v.message;
    return os.str();
}

std::vector<Face> FaceSet::faces_at(const LineComplex& c, VertexId v) const {
    std::vector<Face> out;
    out.reserve(c.q);
    for (std::uint32_t s = 0; s < c.rot[v].size(); ++s) out.push_back(face_at(c, v, s));
    return out;
}

namespace {

std::string vdesc(const LineComplex& c, VertexId v) {
    std::ostringstream os;
    os << "vertex " << v << " (" << to_string(c.colors[v]) << ")";
    return os.str();
}

// Orbit successor for face tracing on a finite complex.
Dart face_next(const LineComplex& c, Dart d) {
    const HalfEdge& h = c.rot[d.v][d.slot];
    return Dart{h.to, static_cast<std::uint32_t>((h.to_slot + 1) % c.rot[h.to].size())};
}

}  // namespace

ValidationReport validate(const LineComplex& c) {
    ValidationReport rep;
    auto add = [&rep](std::string msg) { rep.violations.push_back({std::move(msg)}); };

    if (c.q < 2) add("q must be >= 2, got " + std::to_string(c.q));
    if (c.colors.size() != c.rot.size())
        add("colors/rotation size mismatch");
    const std::size_t n = std::min(c.colors.size(), c.rot.size());
    if (n == 0) {
        add("empty complex");
        return rep;
    }

    bool structural_ok = true;
    for (VertexId v = 0; v < n; ++v) {
        if (c.rot[v].size() != static_cast<std::size_t>(c.q)) {
            add(vdesc(c, v) + ": degree " + std::to_string(c.rot[v].size()) +
                " != q = " + std::to_string(c.q));
            structural_ok = false;
        }
        for (std::uint32_t s = 0; s < c.rot[v].size(); ++s) {
            const HalfEdge& h = c.rot[v][s];
            if (h.to >= n || h.to_slot >= c.rot[h.to].size()) {
                add(vdesc(c, v) + " slot " + std::to_string(s) + ": dangling edge end");
                structural_ok = false;
                continue;
            }
            const HalfEdge& back = c.rot[h.to][h.to_slot];
            if (back.to != v || back.to_slot != s) {
                add(vdesc(c, v) + " slot " + std::to_string(s) +
                    ": rotation pairing not symmetric");
                structural_ok = false;
            }
            if (c.colors[v] == c.colors[h.to]) {
                add("edge " + std::to_string(v) + "--" + std::to_string(h.to) +
                    " joins two " + to_string(c.colors[v]) + " vertices (not bipartite)");
            }
        }
    }
    if (!structural_ok) return rep;  // face tracing would be meaningless

    // Connectivity.
    {
        std::vector<char> seen(n, 0);
        std::deque<VertexId> queue{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const HalfEdge& h : c.rot[v]) {
                if (!seen[h.to]) {
                    seen[h.to] = 1;
                    ++reached;
                    queue.push_back(h.to);
                }
            }
        }
        if (reached != n)
            add("not connected: reached " + std::to_string(reached) + " of " +
                std::to_string(n) + " vertices");
    }

    // Face structure: orbits must partition the darts with even lengths, and
    // branch labels must propagate consistently.
    try {
        FaceSet fs = trace_faces(c);
        for (std::size_t f = 0; f < fs.faces.size(); ++f) {
            if (!fs.faces[f].infinite && fs.faces[f].boundary.size() % 2 != 0)
                add("face " + std::to_string(f) + " has odd length " +
                    std::to_string(fs.faces[f].boundary.size()));
        }
        if (!fs.labels_consistent)
            add("branch labels do not propagate consistently");
    } catch (const NonPlanarRotation& e) {
        add(std::string("face tracing failed: ") + e.what());
    }

    return rep;
}

FaceSet trace_faces(const LineComplex& c) {
    const std::size_t n = c.vertex_count();
    const std::uint32_t q = static_cast<std::uint32_t>(c.q);
    FaceSet fs;
    fs.dart_face.assign(n * q, std::numeric_limits<std::uint32_t>::max());

    auto dart_index = [&](Dart d) { return d.v * q + d.slot; };

    for (VertexId v = 0; v < n; ++v) {
        for (std::uint32_t s = 0; s < q; ++s) {
            Dart start{v, s};
            if (fs.dart_face[dart_index(start)] != std::numeric_limits<std::uint32_t>::max())
                continue;
            const std::uint32_t id = static_cast<std::uint32_t>(fs.faces.size());
            Face face;
            Dart d = start;
            do {
                const std::size_t di = dart_index(d);
                if (fs.dart_face[di] != std::numeric_limits<std::uint32_t>::max())
                    throw NonPlanarRotation("face tracing revisited dart (" +
                                            std::to_string(d.v) + "," + std::to_string(d.slot) +
                                            ") inconsistently");
                fs.dart_face[di] = id;
                face.boundary.push_back(d);
                d = face_next(c, d);
                if (face.boundary.size() > 2 * n * q)
                    throw NonPlanarRotation("face tracing did not terminate");
            } while (!(d == start));
            face.m = face.boundary.size() / 2;
            fs.faces.push_back(std::move(face));
        }
    }

    // Branch labels: the face through dart (v, p) carries label
    //   offset[v] + p (mod q) at inner vertices, offset[v] - p at outer ones,
    // anchored by offset[0] = 0. Propagated over a BFS tree, then every edge
    // is checked; an inconsistency marks the complex as unlabelable.
    std::vector<std::int64_t> offset(n, -1);
    offset[0] = 0;
    std::deque<VertexId> queue{0};
    auto dir = [&](VertexId v) { return c.colors[v] == Color::Inner ? 1 : -1; };
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (std::uint32_t p = 0; p < q; ++p) {
            const HalfEdge& h = c.rot[v][p];
            if (offset[h.to] >= 0) continue;
            std::int64_t want = offset[v] + dir(v) * static_cast<std::int64_t>(p) -
                                dir(h.to) * (static_cast<std::int64_t>(h.to_slot) + 1);
            offset[h.to] = ((want % q) + q) % q;
            queue.push_back(h.to);
        }
    }
    bool consistent = true;
    for (VertexId v = 0; v < n && consistent; ++v) {
        for (std::uint32_t p = 0; p < q; ++p) {
            const HalfEdge& h = c.rot[v][p];
            std::int64_t lhs = offset[v] + dir(v) * static_cast<std::int64_t>(p);
            std::int64_t rhs = offset[h.to] + dir(h.to) * (static_cast<std::int64_t>(h.to_slot) + 1);
            if (((lhs - rhs) % q + q) % q != 0) {
                consistent = false;
                break;
            }
        }
    }
    fs.labels_consistent = consistent;
    if (consistent) {
        for (Face& face : fs.faces) {
            const Dart anchor = face.boundary.front();
            std::int64_t lbl = offset[anchor.v] + dir(anchor.v) * static_cast<std::int64_t>(anchor.slot);
            face.branch_label = static_cast<std::uint32_t>(((lbl % q) + q) % q) + 1;
        }
    }
    return fs;
}

Rational vertex_ramification(const std::vector<Face>& faces_at_v) {
    Rational total = 0;
    for (const Face& f : faces_at_v) {
        if (f.infinite)
            total += 1;
        else
            total += Rational(1) - Rational(BigInt(1), BigInt(f.m));
    }
    return total;
}

Rational polygon_excess(const std::vector<Face>& faces_at_v, int q) {
    Rational total = Rational(2) - Rational(q);
    for (const Face& f : faces_at_v) {
        if (!f.infinite) total += Rational(BigInt(1), BigInt(f.m));
    }
    return total;
}

std::vector<Dart> LocalRule::neighbors(VertexId v) const {
    std::vector<Dart> out;
    const int qq = q();
    out.reserve(qq);
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(qq); ++s) out.push_back(mate(v, s));
    return out;
}

namespace {

class IdWalkCursor : public WalkCursor {
public:
    explicit IdWalkCursor(const LocalRule& rule) : rule_(rule), at_(rule.base()) {}

    void move(std::uint32_t slot) override { at_ = rule_.mate(at_, slot).v; }
    bool at_base() const override { return at_ == rule_.base(); }
    void reset() override { at_ = rule_.base(); }

private:
    const LocalRule& rule_;
    VertexId at_;
};

}  // namespace

std::unique_ptr<WalkCursor> LocalRule::walk_cursor() const {
    return std::make_unique<IdWalkCursor>(*this);
}

Face face_of(const LocalRule& rule, VertexId v, std::uint32_t slot, std::uint64_t cap) {
    if (cap < 2) throw Error("face_of: cap must be >= 2");
    const std::uint32_t q = static_cast<std::uint32_t>(rule.q());
    const Dart start{v, slot};
    Face face;
    Dart d = start;
    std::uint64_t steps = 0;
    while (true) {
        Dart m;
        try {
            m = rule.mate(d.v, d.slot);
            Dart back = rule.mate(m.v, m.slot);
            if (!(back == d))
                throw RuleInconsistent("rule mate() is not an involution at vertex " +
                                       std::to_string(d.v) + " slot " + std::to_string(d.slot));
            if (rule.color(m.v) == rule.color(d.v))
                throw RuleInconsistent("rule edge joins same-colored vertices at vertex " +
                                       std::to_string(d.v));
        } catch (const AddressSpaceExceeded&) {
            // The orbit left the rule's addressable horizon without closing.
            face.infinite = true;
            face.cap_truncated = true;
            face.boundary.clear();
            return face;
        }
        face.boundary.push_back(d);
        ++steps;
        d = Dart{m.v, (m.slot + 1) % q};
        if (d == start) break;
        if (steps >= cap) {
            face.infinite = true;
            face.cap_truncated = true;
            face.boundary.clear();
            return face;
        }
    }
    face.m = face.boundary.size() / 2;
    return face;
}

FiniteComplexRule::FiniteComplexRule(LineComplex c, VertexId base)
    : complex_(std::move(c)), base_(base) {
    if (base_ >= complex_.vertex_count()) throw Error("FiniteComplexRule: base out of range");
}

Dart FiniteComplexRule::mate(VertexId v, std::uint32_t slot) const {
    const HalfEdge& h = complex_.rot.at(v).at(slot);
    return Dart{h.to, h.to_slot};
}

Ball materialize(const LocalRule& rule, std::uint64_t radius,
                 std::optional<std::uint64_t> max_vertices) {
    Ball ball;
    ball.q = rule.q();
    ball.radius = radius;
    const std::uint32_t q = static_cast<std::uint32_t>(ball.q);

    std::unordered_map<VertexId, std::int64_t> local;
    std::deque<VertexId> queue;
    auto discover = [&](VertexId v, std::uint64_t d) {
        local.emplace(v, static_cast<std::int64_t>(ball.rule_id.size()));
        ball.rule_id.push_back(v);
        ball.dist.push_back(d);
        ball.colors.push_back(rule.color(v));
        queue.push_back(v);
    };
    discover(rule.base(), 0);

    ball.complete = true;
    std::size_t head = 0;
    while (head < ball.rule_id.size()) {
        const VertexId v = ball.rule_id[head];
        const std::uint64_t d = ball.dist[head];
        ++head;
        if (d == radius) continue;  // frontier: do not expand
        for (std::uint32_t s = 0; s < q; ++s) {
            const Dart m = rule.mate(v, s);
            if (local.count(m.v)) continue;
            if (max_vertices && ball.rule_id.size() >= *max_vertices) {
                ball.complete = false;
                ball.budget_hit = true;
                continue;
            }
            discover(m.v, d + 1);
        }
    }

    // Fill adjacency; edges reaching outside the ball are marked -1.
    const std::size_t n = ball.rule_id.size();
    ball.adj.assign(n, std::vector<std::int64_t>(q, -1));
    ball.adj_slot.assign(n, std::vector<std::uint32_t>(q, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t s = 0; s < q; ++s) {
            const Dart m = rule.mate(ball.rule_id[i], s);
            auto it = local.find(m.v);
            if (it == local.end()) {
                ball.complete = false;
                continue;
            }
            ball.adj[i][s] = it->second;
            ball.adj_slot[i][s] = m.slot;
        }
    }
    return ball;
}

LineComplex to_line_complex(const Ball& ball) {
    if (!ball.complete) throw Error("to_line_complex: ball is not a complete complex");
    LineComplex c;
    c.q = ball.q;
    c.colors = ball.colors;
    c.rot.resize(ball.size());
    for (std::size_t v = 0; v < ball.size(); ++v) {
        c.rot[v].resize(ball.q);
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(ball.q); ++s) {
            c.rot[v][s] = HalfEdge{static_cast<VertexId>(ball.adj[v][s]), ball.adj_slot[v][s]};
        }
    }
    return c;
}

}  // namespace lc
