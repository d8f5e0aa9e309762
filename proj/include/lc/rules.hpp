#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lc/complex_core.hpp"

namespace lc {

struct ScheduleInvalid : Error {
    using Error::Error;
};

// Chain lengths per tree generation for ChainTreeRule. Lengths are forced odd:
// a chain between branch vertices alternates single edges and (q-1)-bundles
// and must meet both endpoints with a single edge.
struct ChainSchedule {
    enum class Kind { Constant, SqrtGrowth, AlternatingBlocks };

    Kind kind = Kind::Constant;
    std::uint64_t c = 1;       // base multiplier
    std::uint64_t gauge = 1;   // SqrtGrowth: L_k = odd(c * gauge * ceil(sqrt(k)))
    std::uint64_t short_len = 1, long_len = 99;  // AlternatingBlocks

    std::uint64_t length(std::uint64_t k) const;  // k >= 1, always odd

    static ChainSchedule constant(std::uint64_t c) {
        return ChainSchedule{Kind::Constant, c, 1, 1, 99};
    }
    static ChainSchedule sqrt_growth(std::uint64_t c, std::uint64_t gauge) {
        return ChainSchedule{Kind::SqrtGrowth, c, gauge, 1, 99};
    }
    static ChainSchedule alternating(std::uint64_t short_len, std::uint64_t long_len) {
        return ChainSchedule{Kind::AlternatingBlocks, 1, 1, short_len, long_len};
    }
};

// Line complex of the exponential: the doubly infinite chain, q = 2, both
// branch values logarithmic. Vertex t in Z is stored zig-zag encoded; slot 0
// points left, slot 1 points right.
class ExpRule : public LocalRule {
public:
    int q() const override { return 2; }
    VertexId base() const override { return 0; }
    Color color(VertexId v) const override;
    Dart mate(VertexId v, std::uint32_t slot) const override;
    const ShellCensus* shell_census() const override { return &census_; }
    bool all_faces_known_infinite_or_bigon() const override { return true; }

private:
    struct Census : ShellCensus {
        GenerationSlice shell(std::uint64_t nu) const override;
    };
    Census census_;
};

// Infinite tree of branch vertices of degree q joined by unbranched chains;
// the chain from generation k-1 to generation k has schedule length L_k. With
// L == 1 this is the q-regular tree (the modular surface for q = 3); growing
// schedules realize surfaces whose bigon chains dominate every generation.
//
// All faces are bigons (inside bundles) or infinite (chain side strips), so
// V_P = 2 at chain interiors and V_P = q at branch vertices.
class ChainTreeRule : public LocalRule,
                      public std::enable_shared_from_this<ChainTreeRule> {
public:
    ChainTreeRule(int q, ChainSchedule schedule, std::size_t max_level = 4096);

    int q() const override { return q_; }
    VertexId base() const override;
    Color color(VertexId v) const override;
    Dart mate(VertexId v, std::uint32_t slot) const override;

    const ShellCensus* shell_census() const override { return &census_; }
    std::shared_ptr<const SpeiserView> speiser_view() const override;
    std::optional<ChainBound> declared_chain_bound() const override;
    bool all_faces_known_infinite_or_bigon() const override { return true; }
    std::unique_ptr<WalkCursor> walk_cursor() const override;

    const ChainSchedule& schedule() const { return schedule_; }
    std::uint64_t chain_length(std::uint64_t k) const;       // L_k
    std::uint64_t branch_radius(std::uint64_t k) const;      // R_k = sum L_j
    std::size_t max_level() const { return lengths_.size(); }

    // Vertex addressing: (level, branch index, position along incoming chain);
    // position 0 is the branch vertex itself.
    struct Address {
        std::uint64_t level = 0;
        std::uint64_t index = 0;
        std::uint64_t pos = 0;
    };
    static VertexId encode(const Address& a);
    static Address decode(VertexId v);

private:
    friend class ChainTreeCensus;
    friend class ChainTreeSpeiser;
    friend class ChainTreeCursor;

    struct Census : ShellCensus {
        const ChainTreeRule* rule = nullptr;
        GenerationSlice shell(std::uint64_t nu) const override;
    };

    Dart parent_end(std::uint64_t level, std::uint64_t index) const;
    Dart chain_entry(std::uint64_t child_level, std::uint64_t child_index) const;

    int q_;
    ChainSchedule schedule_;
    std::vector<std::uint64_t> lengths_;  // L_1..L_max
    std::vector<std::uint64_t> radii_;    // R_0..R_max
    Census census_;
};

std::shared_ptr<ChainTreeRule> make_tree_rule(int q);                  // L == 1
std::shared_ptr<ChainTreeRule> make_modular_rule();                    // q = 3
std::shared_ptr<ExpRule> make_exp_rule();

// ---------------------------------------------------------------------------
// Table-backed rules (explicit neighbor tables, optionally extended
// periodically along a line of cells)
// ---------------------------------------------------------------------------

struct TableSpec {
    enum class Extend { None, Linear };

    int q = 2;
    Extend extend = Extend::None;
    std::vector<Color> colors;  // one entry per vertex class
    struct Entry {
        std::uint32_t to_class = 0;
        std::uint32_t to_slot = 0;
        std::int64_t cell_offset = 0;  // used only with Extend::Linear
    };
    std::vector<std::vector<Entry>> mate;  // [class][slot]
    std::uint32_t base_class = 0;

    std::size_t class_count() const { return colors.size(); }
    void check() const;  // structural validation; throws Error
};

class TableRule : public LocalRule {
public:
    explicit TableRule(TableSpec spec);

    int q() const override { return spec_.q; }
    VertexId base() const override;
    Color color(VertexId v) const override;
    Dart mate(VertexId v, std::uint32_t slot) const override;

    bool finite() const { return spec_.extend == TableSpec::Extend::None; }
    const TableSpec& spec() const { return spec_; }

private:
    TableSpec spec_;
};

}  // namespace lc
