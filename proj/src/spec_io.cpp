#include "lc/spec_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "lc/exhaustion.hpp"
#include "lc/type_criterion.hpp"
#include "lc/walk_oracle.hpp"

namespace lc {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct SpecLines {
    struct Line {
        std::string key, value;
        int number;
    };
    std::string origin;
    std::vector<Line> lines;

    [[noreturn]] void fail(int number, const std::string& msg) const {
        throw ParseError(origin + ":" + std::to_string(number) + ": " + msg);
    }
};

SpecLines split_lines(const std::string& text, const std::string& origin) {
    SpecLines out;
    out.origin = origin;
    std::istringstream is(text);
    std::string raw;
    int number = 0;
    bool header_seen = false;
    while (std::getline(is, raw)) {
        ++number;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "lc-spec v1")
                throw ParseError(origin + ":" + std::to_string(number) +
                                 ": expected header 'lc-spec v1', got '" + line + "'");
            header_seen = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(origin + ":" + std::to_string(number) +
                             ": expected 'key: value', got '" + line + "'");
        out.lines.push_back({trim(line.substr(0, colon)), trim(line.substr(colon + 1)), number});
    }
    if (!header_seen) throw ParseError(origin + ": missing header 'lc-spec v1'");
    return out;
}

std::uint64_t parse_uint(const SpecLines& doc, const SpecLines::Line& line) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(line.value, &used);
        if (used != line.value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        doc.fail(line.number, "expected a non-negative integer, got '" + line.value + "'");
    }
}

std::int64_t parse_int(const SpecLines& doc, const SpecLines::Line& line, const std::string& text) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        doc.fail(line.number, "expected an integer, got '" + text + "'");
    }
}

Color parse_color(const SpecLines& doc, const SpecLines::Line& line, const std::string& word) {
    if (word == "inner") return Color::Inner;
    if (word == "outer") return Color::Outer;
    doc.fail(line.number, "expected 'inner' or 'outer', got '" + word + "'");
}

ComplexSpec parse_monodromy(const SpecLines& doc) {
    ComplexSpec spec;
    spec.kind = ComplexSpec::Kind::Monodromy;
    std::optional<int> n, q;
    std::optional<std::string> sigma_text;
    int sigma_line = 0;
    for (const auto& line : doc.lines) {
        if (line.key == "kind") continue;
        if (line.key == "n")
            n = static_cast<int>(parse_uint(doc, line));
        else if (line.key == "q")
            q = static_cast<int>(parse_uint(doc, line));
        else if (line.key == "sigma") {
            sigma_text = line.value;
            sigma_line = line.number;
        } else
            doc.fail(line.number, "unknown key '" + line.key + "' in a monodromy spec");
    }
    if (!n) throw ParseError(doc.origin + ": missing 'n'");
    if (!q) throw ParseError(doc.origin + ": missing 'q'");
    if (!sigma_text) throw ParseError(doc.origin + ": missing 'sigma'");

    spec.monodromy.n = *n;
    spec.monodromy.q = *q;
    std::istringstream ss(*sigma_text);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
        piece = trim(piece);
        try {
            spec.monodromy.sigma.push_back(Perm::parse(*n, piece));
        } catch (const Error& e) {
            doc.fail(sigma_line, e.what());
        }
    }
    if (static_cast<int>(spec.monodromy.sigma.size()) != *q)
        doc.fail(sigma_line, "expected q = " + std::to_string(*q) + " permutations, got " +
                                 std::to_string(spec.monodromy.sigma.size()));
    return spec;
}

ComplexSpec parse_rule(const SpecLines& doc) {
    ComplexSpec spec;
    spec.kind = ComplexSpec::Kind::Rule;
    bool gauge_given = false;
    std::vector<std::tuple<int, std::string>> mate_rows;
    for (const auto& line : doc.lines) {
        if (line.key == "kind") continue;
        if (line.key == "rule")
            spec.rule_name = line.value;
        else if (line.key == "q")
            spec.rule_q = static_cast<int>(parse_uint(doc, line));
        else if (line.key == "chain")
            spec.chain = parse_uint(doc, line);
        else if (line.key == "gauge") {
            spec.gauge = parse_uint(doc, line);
            gauge_given = true;
        } else if (line.key == "extend") {
            if (line.value == "none")
                spec.table.extend = TableSpec::Extend::None;
            else if (line.value == "linear")
                spec.table.extend = TableSpec::Extend::Linear;
            else
                doc.fail(line.number, "extend must be 'none' or 'linear'");
        } else if (line.key == "colors") {
            std::istringstream ws(line.value);
            std::string word;
            while (ws >> word) spec.table.colors.push_back(parse_color(doc, line, word));
        } else if (line.key == "mate") {
            mate_rows.emplace_back(line.number, line.value);
        } else if (line.key == "base") {
            spec.table.base_class = static_cast<std::uint32_t>(parse_uint(doc, line));
        } else {
            doc.fail(line.number, "unknown key '" + line.key + "' in a rule spec");
        }
    }
    if (spec.rule_name.empty()) throw ParseError(doc.origin + ": missing 'rule'");

    if (spec.rule_name == "table") {
        spec.table.q = spec.rule_q;
        spec.table.mate.assign(spec.table.class_count(),
                               std::vector<TableSpec::Entry>(spec.rule_q));
        std::vector<std::vector<bool>> filled(spec.table.class_count(),
                                              std::vector<bool>(spec.rule_q, false));
        for (const auto& [number, text] : mate_rows) {
            // "<class> <slot> -> <class> <slot> [@offset]"
            SpecLines::Line fake{"mate", text, number};
            std::istringstream ws(text);
            std::string a, b, arrow, c, d, off;
            if (!(ws >> a >> b >> arrow >> c >> d) || arrow != "->")
                doc.fail(number, "mate row must be '<class> <slot> -> <class> <slot> [@offset]'");
            TableSpec::Entry e;
            std::uint64_t from_class = parse_int(doc, fake, a);
            std::uint64_t from_slot = parse_int(doc, fake, b);
            e.to_class = static_cast<std::uint32_t>(parse_int(doc, fake, c));
            e.to_slot = static_cast<std::uint32_t>(parse_int(doc, fake, d));
            if (ws >> off) {
                if (off.size() < 2 || off[0] != '@') doc.fail(number, "offset must look like '@-1'");
                e.cell_offset = parse_int(doc, fake, off.substr(1));
            }
            if (from_class >= spec.table.class_count() ||
                from_slot >= static_cast<std::uint64_t>(spec.rule_q))
                doc.fail(number, "mate row source out of range");
            spec.table.mate[from_class][from_slot] = e;
            filled[from_class][from_slot] = true;
        }
        for (std::size_t cls = 0; cls < filled.size(); ++cls)
            for (std::size_t s = 0; s < filled[cls].size(); ++s)
                if (!filled[cls][s])
                    throw ParseError(doc.origin + ": missing mate row for class " +
                                     std::to_string(cls) + " slot " + std::to_string(s));
        try {
            spec.table.check();
        } catch (const Error& e) {
            throw ParseError(doc.origin + ": " + e.what());
        }
    } else if (spec.rule_name == "exp") {
        spec.rule_q = 2;
    } else if (spec.rule_name == "modular") {
        spec.rule_q = 3;
    } else if (spec.rule_name == "tree") {
        if (spec.rule_q < 3) throw ParseError(doc.origin + ": tree rule needs q >= 3");
    } else if (spec.rule_name == "counterexample") {
        if (spec.rule_q < 3) throw ParseError(doc.origin + ": counterexample needs q >= 3");
        if (!gauge_given) spec.gauge = 96;
    } else {
        throw ParseError(doc.origin + ": unknown rule '" + spec.rule_name +
                         "' (expected exp, modular, tree, counterexample or table)");
    }
    return spec;
}

}  // namespace

ComplexSpec parse_spec_text(const std::string& text, const std::string& origin) {
    SpecLines doc = split_lines(text, origin);
    std::string kind;
    for (const auto& line : doc.lines)
        if (line.key == "kind") kind = line.value;
    if (kind == "monodromy") return parse_monodromy(doc);
    if (kind == "rule") return parse_rule(doc);
    throw ParseError(origin + ": missing or invalid 'kind' (expected monodromy or rule)");
}

ComplexSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_text(buffer.str(), path);
}

std::string Instance::describe() const {
    if (spec.kind == ComplexSpec::Kind::Monodromy) {
        std::ostringstream os;
        os << "monodromy n=" << spec.monodromy.n << " q=" << spec.monodromy.q;
        return os.str();
    }
    std::ostringstream os;
    os << "rule " << spec.rule_name;
    if (spec.rule_name == "tree" || spec.rule_name == "counterexample")
        os << " q=" << spec.rule_q;
    if (spec.rule_name == "counterexample")
        os << " chain=" << spec.chain << " gauge=" << spec.gauge;
    return os.str();
}

Instance instantiate(const ComplexSpec& spec) {
    Instance inst;
    inst.spec = spec;
    if (spec.kind == ComplexSpec::Kind::Monodromy) {
        LineComplex c = build_from_monodromy(spec.monodromy);
        inst.summary = covering_summary(spec.monodromy);
        inst.finite = c;
        inst.rule = std::make_shared<FiniteComplexRule>(std::move(c));
        return inst;
    }
    if (spec.rule_name == "exp") {
        inst.rule = make_exp_rule();
    } else if (spec.rule_name == "modular") {
        inst.rule = make_modular_rule();
    } else if (spec.rule_name == "tree") {
        inst.rule = make_tree_rule(spec.rule_q);
    } else if (spec.rule_name == "counterexample") {
        inst.rule = counterexample_family(spec.rule_q, spec.chain, spec.gauge);
    } else if (spec.rule_name == "table") {
        auto table = std::make_shared<TableRule>(spec.table);
        if (table->finite()) {
            Ball ball = materialize(*table, spec.table.class_count() + 1);
            LineComplex c = to_line_complex(ball);
            inst.finite = c;
            inst.rule = std::make_shared<FiniteComplexRule>(std::move(c));
        } else {
            inst.rule = table;
        }
    } else {
        throw ParseError("unknown rule '" + spec.rule_name + "'");
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Exports
// ---------------------------------------------------------------------------

std::string export_structured(const LineComplex& c) {
    std::ostringstream os;
    os << "lc-spec v1\n";
    os << "kind: rule\n";
    os << "rule: table\n";
    os << "q: " << c.q << "\n";
    os << "extend: none\n";
    os << "colors:";
    for (Color col : c.colors) os << ' ' << to_string(col);
    os << "\n";
    for (VertexId v = 0; v < c.vertex_count(); ++v)
        for (std::uint32_t s = 0; s < c.rot[v].size(); ++s)
            os << "mate: " << v << ' ' << s << " -> " << c.rot[v][s].to << ' '
               << c.rot[v][s].to_slot << "\n";
    os << "base: 0\n";
    return os.str();
}

namespace {

void dot_nodes(std::ostringstream& os, const std::vector<Color>& colors,
               const std::vector<std::uint64_t>* dist) {
    for (std::size_t v = 0; v < colors.size(); ++v) {
        os << "  v" << v << " [label=\"" << v << "\"";
        os << (colors[v] == Color::Inner ? ", shape=circle, style=filled, fillcolor=white"
                                         : ", shape=doublecircle, style=filled, fillcolor=gray80");
        if (dist && (*dist)[v] > 0) os << ", xlabel=\"d=" << (*dist)[v] << "\"";
        os << "];\n";
    }
}

}  // namespace

std::string export_dot(const LineComplex& c) {
    std::ostringstream os;
    os << "graph linecomplex {\n  layout=neato;\n";
    dot_nodes(os, c.colors, nullptr);
    for (VertexId v = 0; v < c.vertex_count(); ++v)
        for (std::uint32_t s = 0; s < c.rot[v].size(); ++s) {
            const HalfEdge& h = c.rot[v][s];
            if (h.to > v || (h.to == v && h.to_slot > s)) continue;  // emit once
            os << "  v" << h.to << " -- v" << v << ";\n";
        }
    try {
        FaceSet fs = trace_faces(c);
        for (std::size_t f = 0; f < fs.faces.size(); ++f) {
            const Face& face = fs.faces[f];
            os << "  // face " << f << ": label " << face.branch_label << ", m = " << face.m
               << ", boundary";
            for (const Dart& d : face.boundary) os << " (" << d.v << "," << d.slot << ")";
            os << "\n";
        }
    } catch (const Error&) {
        os << "  // faces not traceable\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_dot(const Ball& ball) {
    std::ostringstream os;
    os << "graph linecomplex_ball {\n  layout=neato;\n";
    os << "  // radius " << ball.radius << (ball.complete ? " (complete complex)" : "") << "\n";
    dot_nodes(os, ball.colors, &ball.dist);
    std::size_t outside = 0;
    for (std::size_t v = 0; v < ball.size(); ++v)
        for (std::uint32_t s = 0; s < ball.adj[v].size(); ++s) {
            const std::int64_t w = ball.adj[v][s];
            if (w < 0) {
                os << "  v" << v << " -- out" << outside << ";\n";
                os << "  out" << outside << " [shape=point, style=dashed, label=\"\"];\n";
                ++outside;
                continue;
            }
            if (static_cast<std::uint64_t>(w) > v ||
                (static_cast<std::uint64_t>(w) == v && ball.adj_slot[v][s] > s))
                continue;
            os << "  v" << w << " -- v" << v << ";\n";
        }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace {

void report_finite_complex(std::ostringstream& os, const Instance& inst) {
    const LineComplex& c = *inst.finite;
    ValidationReport vr = validate(c);
    os << "valid: " << (vr.ok() ? "yes" : "no") << "\n";
    if (!vr.ok()) {
        for (const auto& v : vr.violations) os << "violation: " << v.message << "\n";
        return;
    }
    FaceSet fs = trace_faces(c);
    os << "vertices: " << c.vertex_count() << "\n";
    os << "edges: " << c.edge_count() << "\n";
    os << "faces: " << fs.faces.size() << "\n";

    std::map<std::uint64_t, std::size_t> by_m;
    for (const Face& f : fs.faces) ++by_m[f.m];
    os << "faces_by_m:";
    for (const auto& [m, count] : by_m) os << ' ' << m << ':' << count;
    os << "\n";
    os << "bigons: " << (by_m.count(1) ? by_m[1] : 0) << "\n";

    // Total ramification, the face-side route.
    Rational vp_total = 0;
    for (VertexId v = 0; v < c.vertex_count(); ++v)
        vp_total += vertex_ramification(fs.faces_at(c, v));
    os << "sum_vp: " << vp_total << "\n";

    if (inst.summary) {
        const CoveringSummary& s = *inst.summary;
        os << "branching_b: " << s.total_branching << "\n";
        os << "euler_characteristic: " << s.euler_characteristic << "\n";
        os << "genus: " << s.genus << "\n";
        os << "mean_ramification: " << s.mean_ramification << "\n";
        os << "mean_identity_2_minus_2_over_n: "
           << (s.closed_sphere_identity ? "holds" : "not-applicable (genus > 0)") << "\n";
    }
}

void report_rule(std::ostringstream& os, const Instance& inst, const ReportOptions& opts) {
    const LocalRule& rule = *inst.rule;
    os << "q: " << rule.q() << "\n";
    os << "finite: no\n";
    os << "depth: " << opts.depth << "\n";
    ExhaustOptions ex;
    ex.cap = opts.cap;
    ex.window = opts.window;
    ExhaustionReport rep = wreath_exhaust(rule, opts.depth, ex);
    os << "ball_vertices: " << rep.n_nu.back() << "\n";
    os << "v_final: " << rep.v_nu.back() << "\n";
    os << "e_final: " << rep.e_nu.back() << "\n";
    os << "vp_values:";
    for (const Rational& v : rep.vp_distinct) os << ' ' << v;
    os << "\n";
    os << "cap_truncations: " << (rep.cap_truncations ? "yes" : "no") << "\n";
    if (rule.all_faces_known_infinite_or_bigon())
        os << "faces: bigons and logarithmic (infinite) regions only\n";
}

TypeVerdict finite_type_verdict(const Instance& inst) {
    TypeVerdict v;
    if (!inst.summary) {
        v.basis = "finite complex without covering data";
        return v;
    }
    if (inst.summary->genus == 0) {
        v.value = SurfaceType::Elliptic;
        v.basis = "finite covering, closed genus-0 surface (sphere)";
    } else {
        v.value = SurfaceType::Inconclusive;
        v.basis = "finite covering of genus " + std::to_string(inst.summary->genus) +
                  " (not simply connected; type trichotomy does not apply)";
    }
    return v;
}

}  // namespace

std::string build_report(const Instance& inst, const ReportOptions& opts) {
    std::ostringstream os;
    os << "schema: lc-build v1\n";
    os << "input: " << inst.describe() << "\n";
    if (inst.is_finite()) {
        os << "finite: yes\n";
        report_finite_complex(os, inst);
    } else {
        report_rule(os, inst, opts);
    }
    return os.str();
}

std::string walk_report(const Instance& inst, const ReportOptions& opts) {
    std::ostringstream os;
    os << "schema: lc-walk v1\n";
    os << "input: " << inst.describe() << "\n";
    os << "seed: " << opts.seed << "\n";
    WalkEstimate walk = simulate_walk(*inst.rule, opts.walk_trials, opts.horizon, opts.seed);
    os << "walk_trials: " << walk.trials << "\n";
    os << "walk_horizon: " << walk.horizon << "\n";
    os << "walk_returned: " << walk.returned << "\n";
    os << "walk_return_fraction: " << fmt_double(walk.return_fraction) << "\n";
    os << "walk_std_error: " << fmt_double(walk.std_error) << "\n";

    ResistanceOptions ro;
    ro.stride = opts.resistance_stride;
    const std::uint64_t depth = opts.resistance_depth ? opts.resistance_depth : opts.depth;
    ResistanceCurve curve = effective_resistance(*inst.rule, depth, ro);
    os << "resistance_depths:";
    for (std::uint64_t d : curve.depths) os << ' ' << d;
    os << "\n";
    os << "resistance:";
    for (double r : curve.resistance) os << ' ' << fmt_double(r);
    os << "\n";
    if (curve.depths.size() >= 3) {
        TypeVerdict v = oracle_verdict(curve);
        os << "oracle_verdict: " << to_string(v.value) << "\n";
        os << "oracle_basis: " << v.basis << "\n";
    } else {
        os << "oracle_verdict: INCONCLUSIVE\n";
        os << "oracle_basis: curve too short (need 3 depths)\n";
    }
    return os.str();
}

std::string classify_report(const Instance& inst, const ReportOptions& opts) {
    std::ostringstream os;
    os << "schema: lc-classify v1\n";
    os << "input: " << inst.describe() << "\n";
    os << "seed: " << opts.seed << "\n";
    os << "depth: " << opts.depth << "\n";

    if (inst.is_finite()) {
        TypeVerdict fin = finite_type_verdict(inst);
        os << "finite_cover: " << to_string(fin.value) << "\n";
        os << "finite_cover_basis: " << fin.basis << "\n";
        if (inst.summary) {
            os << "mean_ramification: " << inst.summary->mean_ramification << "\n";
            // Exhaustion of the finite complex terminates at the full complex;
            // its final mean must reproduce b/n.
            ExhaustionReport rep = wreath_exhaust(*inst.rule, 4 * inst.finite->vertex_count() + 4);
            os << "exhaustion_v_final: " << rep.v_nu.back() << "\n";
        }
        os << "regular_trichotomy: NOT_APPLICABLE (asymptotic notion; complex is finite)\n";
        os << "series_criterion: NOT_APPLICABLE (finite coverings have only algebraic branch "
              "points)\n";
        os << "walk_oracle: NOT_APPLICABLE (finite complexes are recurrent)\n";
        os << "conjecture: NOT_APPLICABLE (conjecture concerns open simply connected "
              "surfaces)\n";
        return os.str();
    }

    const auto& rule = inst.rule;
    ExhaustOptions ex;
    ex.cap = opts.cap;
    ex.window = opts.window;
    ExhaustionReport rep = wreath_exhaust(*rule, opts.depth, ex);
    LimitEstimate est = limit_estimate(rep, rep.tail_window_size);
    os << "v_window: [" << rep.tail_min << ", " << rep.tail_max << "]\n";
    os << "v_limit_verdict: " << to_string(est.verdict) << "\n";

    // Method 1: regular trichotomy.
    std::optional<TypeVerdict> regular;
    if (rep.regular()) {
        regular = classify_regular(rep);
        os << "regular_trichotomy: " << to_string(regular->value) << "\n";
        os << "regular_trichotomy_basis: " << regular->basis << "\n";
        os << "regular_trichotomy_evidence: " << regular->evidence << "\n";
    } else {
        std::ostringstream vals;
        for (const Rational& v : rep.vp_distinct) vals << ' ' << v;
        os << "regular_trichotomy: NOT_APPLICABLE (V_P takes values" << vals.str() << ")\n";
    }

    // Method 2: series criterion.
    std::optional<TypeVerdict> series;
    const std::uint64_t cond_bound = std::max<std::uint64_t>(64, opts.depth);
    ConditionsReport cond = check_conditions(*rule, cond_bound, opts.cap);
    os << "conditions_hold: " << (cond.all_hold() ? "yes" : "no") << " (certified to "
       << cond.certified_bound << ")\n";
    if (!cond.all_hold()) {
        for (const auto& w : cond.witnesses) os << "conditions_witness: " << w << "\n";
        os << "series_criterion: NOT_APPLICABLE (conditions (1)-(3) fail)\n";
    } else {
        try {
            ChainProfile prof = chain_profile(rule, opts.profile_depth, cond_bound);
            TypeVerdict v = teichmueller_verdict(prof, opts.profile_depth);
            series = v;
            os << "series_criterion: " << to_string(v.value) << "\n";
            os << "series_criterion_basis: " << v.basis << "\n";
            os << "series_criterion_evidence: " << v.evidence << "\n";
            os << "series_psi:";
            for (std::uint64_t p : prof.psi) os << ' ' << p;
            os << "\n";
            os << "series_partial_sum: " << fmt_double(to_double(prof.partial_sums.back()))
               << "\n";
        } catch (const InfiniteChainDetected& e) {
            os << "series_criterion: NOT_APPLICABLE (" << e.what() << ")\n";
        }
    }

    // Method 3: walk oracle.
    std::optional<TypeVerdict> oracle;
    {
        WalkEstimate walk = simulate_walk(*rule, opts.walk_trials, opts.horizon, opts.seed);
        os << "walk_return_fraction: " << fmt_double(walk.return_fraction) << " (stderr "
           << fmt_double(walk.std_error) << ")\n";
        ResistanceOptions ro;
        ro.stride = opts.resistance_stride;
        const std::uint64_t rdepth = opts.resistance_depth ? opts.resistance_depth : opts.depth;
        ResistanceCurve curve = effective_resistance(*rule, rdepth, ro);
        if (curve.depths.size() >= 3) {
            oracle = oracle_verdict(curve);
            os << "walk_oracle: " << to_string(oracle->value) << "-proxy\n";
            os << "walk_oracle_basis: " << oracle->basis << "\n";
        } else {
            os << "walk_oracle: INCONCLUSIVE (resistance curve too short)\n";
        }
    }

    // Conjecture assessment against the strongest paper-grounded verdict.
    const TypeVerdict* verdict = nullptr;
    std::string verdict_source;
    if (series && series->value != SurfaceType::Inconclusive) {
        verdict = &*series;
        verdict_source = "series criterion";
    } else if (regular) {
        verdict = &*regular;
        verdict_source = "regular trichotomy";
    } else if (oracle && oracle->value != SurfaceType::Inconclusive) {
        verdict = &*oracle;
        verdict_source = "walk oracle (proxy)";
    }
    if (verdict) {
        ConjectureAssessment cj = nevanlinna_conjecture_eval(rep, *verdict);
        os << "conjecture: " << to_string(cj.outcome) << "\n";
        os << "conjecture_verdict_source: " << verdict_source << "\n";
        os << "conjecture_detail: " << cj.detail << "\n";
    } else {
        os << "conjecture: INCONCLUSIVE (no independent type verdict)\n";
    }
    return os.str();
}

}  // namespace lc
