#include "lc/rules.hpp"

#include <algorithm>
#include <cmath>

namespace lc {

namespace {

constexpr double kZeta2 = 1.6449340668482264;     // pi^2/6
constexpr double kZeta3Half = 2.612375348685488;  // zeta(3/2)

std::uint64_t make_odd(std::uint64_t v) { return v % 2 == 0 ? v + 1 : v; }

std::uint64_t ceil_sqrt(std::uint64_t k) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(k)));
    while (r * r < k) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= k) --r;
    return r;
}

std::uint64_t floor_log2(std::uint64_t k) {
    std::uint64_t l = 0;
    while (k >>= 1) ++l;
    return l;
}

// Zig-zag encoding of Z into uint64.
std::uint64_t zigzag(std::int64_t t) {
    return t >= 0 ? static_cast<std::uint64_t>(t) * 2
                  : static_cast<std::uint64_t>(-t) * 2 - 1;
}

std::int64_t unzigzag(std::uint64_t id) {
    return id % 2 == 0 ? static_cast<std::int64_t>(id / 2)
                       : -static_cast<std::int64_t>((id + 1) / 2);
}

}  // namespace

std::uint64_t ChainSchedule::length(std::uint64_t k) const {
    if (k == 0) throw ScheduleInvalid("chain generations are numbered from 1");
    switch (kind) {
        case Kind::Constant:
            if (c < 1) throw ScheduleInvalid("constant schedule needs c >= 1");
            return make_odd(c);
        case Kind::SqrtGrowth:
            if (c < 1 || gauge < 1) throw ScheduleInvalid("sqrt schedule needs c, gauge >= 1");
            return make_odd(c * gauge * ceil_sqrt(k));
        case Kind::AlternatingBlocks:
            if (short_len < 1 || long_len < 1)
                throw ScheduleInvalid("alternating schedule needs positive lengths");
            return floor_log2(k) % 2 == 0 ? make_odd(short_len) : make_odd(long_len);
    }
    throw ScheduleInvalid("unknown schedule kind");
}

// ---------------------------------------------------------------------------
// ExpRule
// ---------------------------------------------------------------------------

Color ExpRule::color(VertexId v) const {
    std::int64_t t = unzigzag(v);
    return ((t % 2) + 2) % 2 == 0 ? Color::Inner : Color::Outer;
}

Dart ExpRule::mate(VertexId v, std::uint32_t slot) const {
    std::int64_t t = unzigzag(v);
    if (slot == 0) return Dart{zigzag(t - 1), 1};
    if (slot == 1) return Dart{zigzag(t + 1), 0};
    throw Error("ExpRule: slot out of range");
}

GenerationSlice ExpRule::Census::shell(std::uint64_t nu) const {
    // Two vertices at distance nu (one on each side), each seeing the two
    // infinite side faces: V_P = 2.
    GenerationSlice s;
    s.vertex_count = 2;
    s.ramification_sum = 4;
    s.vp_values = {Rational(2)};
    s.involves_infinite_faces = true;
    (void)nu;
    return s;
}

// ---------------------------------------------------------------------------
// ChainTreeRule
// ---------------------------------------------------------------------------

namespace {
constexpr std::uint64_t kPosBits = 14;
constexpr std::uint64_t kIndexBits = 40;
constexpr std::uint64_t kLevelBits = 10;
constexpr std::uint64_t kPosMask = (1ULL << kPosBits) - 1;
constexpr std::uint64_t kIndexMask = (1ULL << kIndexBits) - 1;
constexpr std::uint64_t kLevelMask = (1ULL << kLevelBits) - 1;
}  // namespace

VertexId ChainTreeRule::encode(const Address& a) {
    if (a.pos > kPosMask || a.index > kIndexMask || a.level > kLevelMask)
        throw AddressSpaceExceeded(
            "ChainTreeRule: vertex address space exceeded "
            "(use the walk cursor / census for deep traversals)");
    return (a.level << (kPosBits + kIndexBits)) | (a.index << kPosBits) | a.pos;
}

ChainTreeRule::Address ChainTreeRule::decode(VertexId v) {
    Address a;
    a.pos = v & kPosMask;
    a.index = (v >> kPosBits) & kIndexMask;
    a.level = (v >> (kPosBits + kIndexBits)) & kLevelMask;
    return a;
}

ChainTreeRule::ChainTreeRule(int q, ChainSchedule schedule, std::size_t max_level)
    : q_(q), schedule_(schedule) {
    if (q < 3) throw Error("ChainTreeRule needs q >= 3 (the q = 2 chain is ExpRule)");
    lengths_.reserve(max_level);
    radii_.reserve(max_level + 1);
    radii_.push_back(0);
    for (std::size_t k = 1; k <= max_level; ++k) {
        lengths_.push_back(schedule_.length(k));
        radii_.push_back(radii_.back() + lengths_.back());
    }
    census_.rule = this;
}

std::uint64_t ChainTreeRule::chain_length(std::uint64_t k) const {
    if (k == 0 || k > lengths_.size())
        throw Error("ChainTreeRule: generation out of configured range");
    return lengths_[k - 1];
}

std::uint64_t ChainTreeRule::branch_radius(std::uint64_t k) const {
    if (k >= radii_.size()) throw Error("ChainTreeRule: generation out of configured range");
    return radii_[k];
}

VertexId ChainTreeRule::base() const { return encode(Address{0, 0, 0}); }

Color ChainTreeRule::color(VertexId v) const {
    Address a = decode(v);
    std::uint64_t dist =
        a.pos == 0 ? branch_radius(a.level) : branch_radius(a.level - 1) + a.pos;
    return dist % 2 == 0 ? Color::Inner : Color::Outer;
}

Dart ChainTreeRule::parent_end(std::uint64_t level, std::uint64_t index) const {
    // Dart at the parent branch vertex pointing into the chain toward
    // (level, index).
    if (level == 1) return Dart{encode(Address{0, 0, 0}), static_cast<std::uint32_t>(index)};
    std::uint64_t parent = index / (q_ - 1);
    std::uint32_t slot = static_cast<std::uint32_t>(1 + index % (q_ - 1));
    return Dart{encode(Address{level - 1, parent, 0}), slot};
}

Dart ChainTreeRule::chain_entry(std::uint64_t child_level, std::uint64_t child_index) const {
    // First vertex reached when stepping from the parent into the chain.
    if (chain_length(child_level) == 1)
        return Dart{encode(Address{child_level, child_index, 0}), 0};
    return Dart{encode(Address{child_level, child_index, 1}), 0};
}

Dart ChainTreeRule::mate(VertexId v, std::uint32_t slot) const {
    if (slot >= static_cast<std::uint32_t>(q_)) throw Error("ChainTreeRule: slot out of range");
    const Address a = decode(v);

    if (a.pos == 0) {
        if (a.level == 0) {
            // Root: every slot starts a child chain.
            return chain_entry(1, slot);
        }
        if (slot == 0) {
            // Back along the incoming chain.
            const std::uint64_t len = chain_length(a.level);
            if (len == 1) return parent_end(a.level, a.index);
            return Dart{encode(Address{a.level, a.index, len - 1}), 0};
        }
        // Child chains at slots 1..q-1.
        return chain_entry(a.level + 1, a.index * (q_ - 1) + (slot - 1));
    }

    // Chain interior. Segment p (joining pos p-1 to pos p) is a single edge
    // when p is odd and a (q-1)-bundle when p is even; bundle strands pair
    // anti-aligned so consecutive strands bound bigons.
    const std::uint64_t len = chain_length(a.level);
    const bool odd = a.pos % 2 == 1;
    if (odd) {
        if (slot == 0) {  // single edge toward the parent side
            if (a.pos == 1) return parent_end(a.level, a.index);
            return Dart{encode(Address{a.level, a.index, a.pos - 1}), 0};
        }
        return Dart{encode(Address{a.level, a.index, a.pos + 1}),
                    static_cast<std::uint32_t>(q_ - slot)};
    }
    if (slot == 0) {  // single edge toward the child side
        if (a.pos == len - 1) return Dart{encode(Address{a.level, a.index, 0}), 0};
        return Dart{encode(Address{a.level, a.index, a.pos + 1}), 0};
    }
    return Dart{encode(Address{a.level, a.index, a.pos - 1}),
                static_cast<std::uint32_t>(q_ - slot)};
}

GenerationSlice ChainTreeRule::Census::shell(std::uint64_t nu) const {
    const auto& radii = rule->radii_;
    if (nu == 0 || nu > radii.back())
        throw Error("ChainTreeRule census: depth exceeds configured max_level");
    // Generation band: R_{k-1} < nu <= R_k.
    auto it = std::lower_bound(radii.begin(), radii.end(), nu);
    const std::uint64_t k = static_cast<std::uint64_t>(it - radii.begin());
    const std::uint64_t offset = nu - radii[k - 1];
    const int q = rule->q_;

    BigInt count = q;
    for (std::uint64_t j = 1; j < k; ++j) count *= (q - 1);

    GenerationSlice s;
    s.vertex_count = count;
    s.involves_infinite_faces = true;
    if (offset == rule->lengths_[k - 1]) {
        s.ramification_sum = Rational(BigInt(q) * count);
        s.vp_values = {Rational(q)};
    } else {
        s.ramification_sum = Rational(2 * count);
        s.vp_values = {Rational(2)};
    }
    return s;
}

namespace {

class ChainTreeSpeiser : public SpeiserView {
public:
    explicit ChainTreeSpeiser(std::shared_ptr<const ChainTreeRule> rule)
        : rule_(std::move(rule)) {}

    int q() const override { return rule_->q(); }
    VertexId base() const override { return rule_->base(); }

    std::vector<SpeiserEdge> neighbors(VertexId v) const override {
        const auto a = ChainTreeRule::decode(v);
        if (a.pos != 0) throw Error("SpeiserView: not a branch vertex");
        const int q = rule_->q();
        std::vector<SpeiserEdge> out;
        out.reserve(q);
        if (a.level == 0) {
            for (int s = 0; s < q; ++s)
                out.push_back(SpeiserEdge{
                    ChainTreeRule::encode({1, static_cast<std::uint64_t>(s), 0}),
                    rule_->chain_length(1), 0});
            return out;
        }
        const std::uint64_t parent = a.level == 1 ? 0 : a.index / (q - 1);
        const std::uint32_t back =
            a.level == 1 ? static_cast<std::uint32_t>(a.index)
                         : static_cast<std::uint32_t>(1 + a.index % (q - 1));
        out.push_back(SpeiserEdge{ChainTreeRule::encode({a.level - 1, parent, 0}),
                                  rule_->chain_length(a.level), back});
        for (int s = 1; s < q; ++s)
            out.push_back(SpeiserEdge{
                ChainTreeRule::encode(
                    {a.level + 1, a.index * (q - 1) + (s - 1), 0}),
                rule_->chain_length(a.level + 1), 0});
        return out;
    }

private:
    std::shared_ptr<const ChainTreeRule> rule_;
};

class ChainTreeCursor : public WalkCursor {
public:
    explicit ChainTreeCursor(const ChainTreeRule& rule)
        : q_(rule.q()), schedule_(rule.schedule()) {}

    void move(std::uint32_t slot) override {
        if (pos_ == 0) {
            const std::uint64_t level = path_.size();
            if (level == 0) {  // root
                enter_chain(slot);
                return;
            }
            if (slot == 0) {  // back along the incoming chain
                const std::uint64_t len = schedule_.length(level);
                if (len == 1)
                    path_.pop_back();
                else
                    pos_ = len - 1;
                return;
            }
            enter_chain(slot - 1);
            return;
        }
        const std::uint64_t len = schedule_.length(path_.size());
        if (pos_ % 2 == 1) {
            if (slot == 0) {  // toward the parent
                if (pos_ == 1) {
                    path_.pop_back();
                    pos_ = 0;
                } else {
                    --pos_;
                }
            } else {
                ++pos_;
            }
            return;
        }
        if (slot == 0) {  // toward the child
            pos_ = (pos_ == len - 1) ? 0 : pos_ + 1;
        } else {
            --pos_;
        }
    }

    bool at_base() const override { return path_.empty() && pos_ == 0; }

    void reset() override {
        path_.clear();
        pos_ = 0;
    }

private:
    void enter_chain(std::uint32_t child) {
        path_.push_back(child);
        pos_ = schedule_.length(path_.size()) == 1 ? 0 : 1;
    }

    int q_;
    ChainSchedule schedule_;
    std::vector<std::uint32_t> path_;  // child indices from the root
    std::uint64_t pos_ = 0;            // 0: at branch vertex path_; else chain offset
};

}  // namespace

std::shared_ptr<const SpeiserView> ChainTreeRule::speiser_view() const {
    try {
        return std::make_shared<ChainTreeSpeiser>(shared_from_this());
    } catch (const std::bad_weak_ptr&) {
        return nullptr;  // not managed by shared_ptr
    }
}

std::optional<ChainBound> ChainTreeRule::declared_chain_bound() const {
    ChainBound b;
    const ChainSchedule sched = schedule_;
    switch (schedule_.kind) {
        case ChainSchedule::Kind::Constant: {
            const std::uint64_t len = sched.length(1);
            b.description = "constant chain length " + std::to_string(len) +
                            "; sum psi(k)/k^2 <= " + std::to_string(len) + " * pi^2/6";
            b.at = [len](std::uint64_t) { return len; };
            b.series_sum_bound = static_cast<double>(len) * kZeta2;
            return b;
        }
        case ChainSchedule::Kind::SqrtGrowth: {
            const double cg = static_cast<double>(sched.c) * static_cast<double>(sched.gauge);
            b.description = "psi(k) = odd(" + std::to_string(sched.c * sched.gauge) +
                            " * ceil(sqrt(k))); sum psi(k)/k^2 <= " +
                            std::to_string(cg * kZeta3Half + (cg + 1.0) * kZeta2);
            b.at = [sched](std::uint64_t k) { return sched.length(k); };
            b.series_sum_bound = cg * kZeta3Half + (cg + 1.0) * kZeta2;
            return b;
        }
        case ChainSchedule::Kind::AlternatingBlocks:
            return std::nullopt;
    }
    return std::nullopt;
}

std::unique_ptr<WalkCursor> ChainTreeRule::walk_cursor() const {
    return std::make_unique<ChainTreeCursor>(*this);
}

std::shared_ptr<ChainTreeRule> make_tree_rule(int q) {
    return std::make_shared<ChainTreeRule>(q, ChainSchedule::constant(1));
}

std::shared_ptr<ChainTreeRule> make_modular_rule() { return make_tree_rule(3); }

std::shared_ptr<ExpRule> make_exp_rule() { return std::make_shared<ExpRule>(); }

// ---------------------------------------------------------------------------
// TableRule
// ---------------------------------------------------------------------------

void TableSpec::check() const {
    if (q < 2) throw Error("table: q must be >= 2");
    if (colors.empty()) throw Error("table: no vertex classes");
    if (mate.size() != colors.size()) throw Error("table: mate table size != class count");
    for (std::size_t c = 0; c < mate.size(); ++c) {
        if (mate[c].size() != static_cast<std::size_t>(q))
            throw Error("table: class " + std::to_string(c) + " has " +
                        std::to_string(mate[c].size()) + " slots, expected q = " +
                        std::to_string(q));
        for (std::size_t s = 0; s < mate[c].size(); ++s) {
            const Entry& e = mate[c][s];
            if (e.to_class >= colors.size())
                throw Error("table: class out of range in mate row");
            if (e.to_slot >= static_cast<std::uint32_t>(q))
                throw Error("table: slot out of range in mate row");
            if (extend == Extend::None && e.cell_offset != 0)
                throw Error("table: cell offsets need extend: linear");
            const Entry& back = mate[e.to_class][e.to_slot];
            if (back.to_class != c || back.to_slot != s || back.cell_offset != -e.cell_offset)
                throw Error("table: mate rows not involutive at class " + std::to_string(c) +
                            " slot " + std::to_string(s));
            if (colors[c] == colors[e.to_class])
                throw Error("table: edge joins two " + std::string(to_string(colors[c])) +
                            " classes (not bipartite)");
        }
    }
    if (base_class >= colors.size()) throw Error("table: base class out of range");
}

TableRule::TableRule(TableSpec spec) : spec_(std::move(spec)) { spec_.check(); }

namespace {
std::pair<std::int64_t, std::uint32_t> table_decode(VertexId v, std::size_t classes) {
    const std::uint64_t cell_code = v / classes;
    return {unzigzag(cell_code), static_cast<std::uint32_t>(v % classes)};
}
VertexId table_encode(std::int64_t cell, std::uint32_t cls, std::size_t classes) {
    return zigzag(cell) * classes + cls;
}
}  // namespace

VertexId TableRule::base() const { return table_encode(0, spec_.base_class, spec_.class_count()); }

Color TableRule::color(VertexId v) const {
    auto [cell, cls] = table_decode(v, spec_.class_count());
    (void)cell;
    return spec_.colors.at(cls);
}

Dart TableRule::mate(VertexId v, std::uint32_t slot) const {
    auto [cell, cls] = table_decode(v, spec_.class_count());
    const TableSpec::Entry& e = spec_.mate.at(cls).at(slot);
    std::int64_t target_cell = finite() ? 0 : cell + e.cell_offset;
    if (finite() && (cell != 0))
        throw Error("table: vertex outside finite table");
    return Dart{table_encode(target_cell, e.to_class, spec_.class_count()), e.to_slot};
}

}  // namespace lc
