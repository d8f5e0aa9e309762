#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lc/rational.hpp"

namespace lc {

using VertexId = std::uint64_t;

enum class Color : std::uint8_t { Inner, Outer };

inline Color flip(Color c) { return c == Color::Inner ? Color::Outer : Color::Inner; }
inline const char* to_string(Color c) { return c == Color::Inner ? "inner" : "outer"; }

// An edge-end: slot s in the cyclic rotation at vertex v.
struct Dart {
    VertexId v = 0;
    std::uint32_t slot = 0;

    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct DartHash {
    std::size_t operator()(const Dart& d) const {
        return std::hash<std::uint64_t>()(d.v * 1000003u + d.slot);
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPlanarRotation : Error {
    using Error::Error;
};
struct RuleInconsistent : Error {
    using Error::Error;
};
// Raised by rules whose flat vertex ids cannot address a requested region
// (tree-backed rules grow too fast for 64-bit ids). Face walks treat it as
// "did not close within the addressable horizon"; long random walks use
// cursors instead of ids.
struct AddressSpaceExceeded : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Finite line complexes
// ---------------------------------------------------------------------------

struct HalfEdge {
    VertexId to = 0;
    std::uint32_t to_slot = 0;
};

// Bipartite q-homogeneous graph with a rotation system. Vertex ids are dense
// (0..V-1). rot[v][s] names the opposite end of the edge occupying slot s at
// v; the pairing must be involutive. Faces are orbits of
//   (v, s)  ->  (w, t+1 mod q)   where (w, t) = rot[v][s].
struct LineComplex {
    int q = 2;
    std::vector<Color> colors;
    std::vector<std::vector<HalfEdge>> rot;

    std::size_t vertex_count() const { return colors.size(); }
    std::size_t edge_count() const;
};

struct Violation {
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// A face of the complex. A finite face has 2m sides and corresponds to a
// branch point of order m-1 (m = 1: unbranched bigon). An infinite face
// corresponds to a logarithmic ramification point; for lazily traced faces
// `cap_truncated` records that infinitude was only certified up to a cap.
struct Face {
    std::vector<Dart> boundary;   // empty when infinite
    std::uint64_t m = 1;          // meaningful only when !infinite
    bool infinite = false;
    bool cap_truncated = false;
    std::uint32_t branch_label = 0;  // 1..q, 0 = undetermined
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<std::uint32_t> dart_face;  // indexed by v*q + slot
    bool labels_consistent = true;

    const Face& face_at(const LineComplex& c, VertexId v, std::uint32_t slot) const {
        return faces[dart_face[v * c.q + slot]];
    }
    // The q face corners incident to v, in rotation order (with multiplicity).
    std::vector<Face> faces_at(const LineComplex& c, VertexId v) const;
};

ValidationReport validate(const LineComplex& c);

// Requires validate(c).ok(); throws NonPlanarRotation on malformed rotations.
FaceSet trace_faces(const LineComplex& c);

// V_P = sum over the q incident face corners of (1 - 1/m); an infinite face
// contributes 1. Exact.
Rational vertex_ramification(const std::vector<Face>& faces_at_v);

// E_P = sum 1/m - q + 2 over the same corner data (infinite faces contribute
// 0 to the sum). Exact; V_P + E_P = 2 identically.
Rational polygon_excess(const std::vector<Face>& faces_at_v, int q);

// ---------------------------------------------------------------------------
// Rule-backed (possibly infinite) complexes
// ---------------------------------------------------------------------------

// Per-shell data for rules whose exhaustion is known in closed form.
struct GenerationSlice {
    BigInt vertex_count;                 // vertices at distance exactly nu
    Rational ramification_sum;           // sum of V_P over that shell
    std::vector<Rational> vp_values;     // distinct V_P values occurring
    bool involves_infinite_faces = false;
};

class ShellCensus {
public:
    virtual ~ShellCensus() = default;
    virtual GenerationSlice shell(std::uint64_t nu) const = 0;
};

// Contracted (Speiser) view of a complex satisfying the branching conditions:
// vertices are branch vertices, unbranched chains become weighted edges.
struct SpeiserEdge {
    VertexId to = 0;
    std::uint64_t weight = 1;      // chain length in edges of the original
    std::uint32_t back_dir = 0;
};

class SpeiserView {
public:
    virtual ~SpeiserView() = default;
    virtual int q() const = 0;
    virtual VertexId base() const = 0;
    virtual std::vector<SpeiserEdge> neighbors(VertexId v) const = 0;
};

// Declared closed-form bound on psi(k), carried by constructions that know
// their chain schedule. `series_sum_bound` bounds sum psi(k)/k^2.
struct ChainBound {
    std::string description;
    std::function<std::uint64_t(std::uint64_t)> at;
    double series_sum_bound = 0.0;
};

// Stateful position for long random walks. Tree-backed rules walk to depths
// where flat vertex ids would overflow, so the walker never touches ids; it
// only moves along slots and asks whether it is back at the base vertex.
class WalkCursor {
public:
    virtual ~WalkCursor() = default;
    virtual void move(std::uint32_t slot) = 0;
    virtual bool at_base() const = 0;
    virtual void reset() = 0;
};

// Finite description of a (possibly infinite) line complex: a deterministic
// neighborhood oracle. mate must be a color-alternating involution.
class LocalRule {
public:
    virtual ~LocalRule() = default;

    virtual int q() const = 0;
    virtual VertexId base() const = 0;
    virtual Color color(VertexId v) const = 0;
    virtual Dart mate(VertexId v, std::uint32_t slot) const = 0;

    // Optional capabilities.
    virtual const ShellCensus* shell_census() const { return nullptr; }
    virtual std::shared_ptr<const SpeiserView> speiser_view() const { return nullptr; }
    virtual std::optional<ChainBound> declared_chain_bound() const { return std::nullopt; }
    virtual bool all_faces_known_infinite_or_bigon() const { return false; }
    virtual std::unique_ptr<WalkCursor> walk_cursor() const;  // default: id-based

    std::vector<Dart> neighbors(VertexId v) const;
};

// Lazily traces the face through (v, slot); gives up after `cap` edge-ends
// and reports an infinite, cap-truncated face. cap >= 2.
Face face_of(const LocalRule& rule, VertexId v, std::uint32_t slot, std::uint64_t cap);

// LocalRule view of a finite complex.
class FiniteComplexRule : public LocalRule {
public:
    explicit FiniteComplexRule(LineComplex c, VertexId base = 0);

    int q() const override { return complex_.q; }
    VertexId base() const override { return base_; }
    Color color(VertexId v) const override { return complex_.colors.at(v); }
    Dart mate(VertexId v, std::uint32_t slot) const override;

    const LineComplex& complex() const { return complex_; }

private:
    LineComplex complex_;
    VertexId base_;
};

// BFS truncation of a rule: vertices at distance <= radius, discovery-order
// local ids (ties broken by slot index), edges kept when both ends lie inside.
struct Ball {
    int q = 2;
    std::uint64_t radius = 0;
    std::vector<VertexId> rule_id;              // local id -> rule id
    std::vector<std::uint64_t> dist;
    std::vector<Color> colors;
    std::vector<std::vector<std::int64_t>> adj;  // adj[v][slot] local id or -1
    std::vector<std::vector<std::uint32_t>> adj_slot;
    bool complete = false;    // true when the whole complex fit inside
    bool budget_hit = false;  // discovery stopped by the vertex budget

    std::size_t size() const { return rule_id.size(); }
};

Ball materialize(const LocalRule& rule, std::uint64_t radius,
                 std::optional<std::uint64_t> max_vertices = std::nullopt);

// Converts a complete ball (a finite complex fully explored) back to a
// LineComplex with canonical BFS ids.
LineComplex to_line_complex(const Ball& ball);

}  // namespace lc
