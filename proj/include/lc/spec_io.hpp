#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "lc/complex_core.hpp"
#include "lc/hurwitz.hpp"
#include "lc/rules.hpp"

namespace lc {

struct ParseError : Error {
    using Error::Error;
};

// Parsed form of a spec document (schema "lc-spec v1"): either monodromy data
// or a named rule with parameters.
struct ComplexSpec {
    enum class Kind { Monodromy, Rule };

    Kind kind = Kind::Monodromy;
    MonodromyDatum monodromy;

    std::string rule_name;        // exp | modular | tree | counterexample | table
    int rule_q = 3;
    std::uint64_t chain = 1;      // counterexample: base chain length
    std::uint64_t gauge = 96;     // counterexample: growth gauge (0: constant chains)
    TableSpec table;
};

ComplexSpec parse_spec_text(const std::string& text, const std::string& origin);
ComplexSpec parse_spec_file(const std::string& path);

// A spec brought to life: always a rule; finite complexes additionally carry
// their explicit form and covering summary.
struct Instance {
    ComplexSpec spec;
    std::shared_ptr<const LocalRule> rule;
    std::optional<LineComplex> finite;
    std::optional<CoveringSummary> summary;  // monodromy input only

    bool is_finite() const { return finite.has_value(); }
    std::string describe() const;
};

Instance instantiate(const ComplexSpec& spec);

// Structured export: a finite table spec that re-imports to a complex with
// identical statistics. DOT export is for human eyes only.
std::string export_structured(const LineComplex& c);
std::string export_dot(const LineComplex& c);
std::string export_dot(const Ball& ball);

struct ReportOptions {
    std::uint64_t depth = 50;
    std::uint64_t cap = 0;            // face-tracing cap (0: auto)
    std::uint64_t window = 0;         // limit window (0: depth/4)
    std::uint64_t walk_trials = 2000;
    std::uint64_t horizon = 10000;
    std::uint64_t seed = 1;
    std::uint64_t profile_depth = 10;  // chain-profile generations
    std::uint64_t resistance_depth = 0;  // 0: use depth
    std::uint64_t resistance_stride = 1;
};

std::string build_report(const Instance& inst, const ReportOptions& opts);
std::string classify_report(const Instance& inst, const ReportOptions& opts);
std::string walk_report(const Instance& inst, const ReportOptions& opts);

}  // namespace lc
