#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lc/dilatation.hpp"
#include "lc/exhaustion.hpp"
#include "lc/spec_io.hpp"
#include "lc/type_criterion.hpp"
#include "lc/walk_oracle.hpp"

namespace {

// Exit codes: 0 success, 1 parse/validation failure, 2 internal inconsistency.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw lc::Error("cannot write to " + out_path);
    out << text;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line complex construction and type analysis"};
    app.require_subcommand(1);

    std::string spec_path, out_path, format = "structured";
    lc::ReportOptions opts;
    double demo_k = 1.0;
    int demo_rows = 3;
    std::vector<double> jacobian, annulus;

    auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
        if (needs_spec) cmd->add_option("spec", spec_path, "spec file")->required();
        cmd->add_option("--out", out_path, "write the report to a file");
    };

    CLI::App* build = app.add_subcommand("build", "construct, validate and summarize");
    add_common(build);
    build->add_option("--depth", opts.depth, "exhaustion depth for rule-backed complexes");
    build->add_option("--cap", opts.cap, "face-tracing cap (0: automatic)");

    CLI::App* classify = app.add_subcommand("classify", "consolidated type verdict table");
    add_common(classify);
    classify->add_option("--depth", opts.depth, "exhaustion depth");
    classify->add_option("--cap", opts.cap, "face-tracing cap (0: automatic)");
    classify->add_option("--walk-trials", opts.walk_trials, "random walk trials");
    classify->add_option("--horizon", opts.horizon, "random walk horizon");
    classify->add_option("--seed", opts.seed, "RNG seed");
    classify->add_option("--window", opts.window, "limit-estimate window (0: depth/4)");
    classify->add_option("--profile-depth", opts.profile_depth, "chain profile generations");
    classify->add_option("--resistance-depth", opts.resistance_depth,
                         "resistance curve depth (0: use --depth)");
    classify->add_option("--resistance-stride", opts.resistance_stride,
                         "evaluate resistance every Nth depth");

    CLI::App* exportc = app.add_subcommand("export", "emit DOT or a structured table");
    add_common(exportc);
    exportc->add_option("--format", format, "dot | structured")
        ->check(CLI::IsMember({"dot", "structured"}));
    exportc->add_option("--depth", opts.depth, "truncation radius for rule-backed complexes");

    CLI::App* walk = app.add_subcommand("walk", "random walk and effective resistance oracle");
    add_common(walk);
    walk->add_option("--walk-trials", opts.walk_trials, "random walk trials");
    walk->add_option("--horizon", opts.horizon, "random walk horizon");
    walk->add_option("--seed", opts.seed, "RNG seed");
    walk->add_option("--depth", opts.depth, "resistance curve depth");
    walk->add_option("--resistance-stride", opts.resistance_stride,
                     "evaluate resistance every Nth depth");

    CLI::App* dil = app.add_subcommand("dilatation", "dilatation quotient and annulus moduli");
    add_common(dil, /*needs_spec=*/false);
    dil->add_option("--jacobian", jacobian, "ux uy vx vy sample")->expected(4);
    dil->add_option("--annulus", annulus, "r1 r2")->expected(2);
    dil->add_option("--demo-K", demo_k, "plane-vs-disc demonstration for dilatation bound K");
    dil->add_option("--rows", demo_rows, "demonstration rows");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dil->parsed()) {
            std::ostringstream os;
            os << "schema: lc-dilatation v1\n";
            if (!jacobian.empty()) {
                lc::JacobianSample j{jacobian[0], jacobian[1], jacobian[2], jacobian[3]};
                os << "dilatation_quotient: " << fmt(lc::dilatation_quotient(j)) << "\n";
            }
            if (!annulus.empty()) {
                lc::AnnulusSpec a{annulus[0], annulus[1]};
                os << "annulus_modulus: " << fmt(lc::annulus_modulus(a)) << "\n";
            }
            lc::Demonstration demo = lc::plane_vs_disc_demo(demo_k, demo_rows);
            os << "demo_K: " << fmt(demo.K) << "\n";
            for (const auto& row : demo.rows)
                os << "demo_row: r2 " << fmt(row.r2) << " modulus " << fmt(row.modulus)
                   << " image_modulus_at_least " << fmt(row.image_modulus_lower_bound) << "\n";
            write_out(os.str(), out_path);
            return kOk;
        }

        lc::ComplexSpec spec = lc::parse_spec_file(spec_path);
        lc::Instance inst = lc::instantiate(spec);

        if (inst.is_finite()) {
            lc::ValidationReport vr = lc::validate(*inst.finite);
            if (!vr.ok()) {
                std::ostringstream os;
                os << "input: " << inst.describe() << "\n";
                os << "valid: no\n";
                for (const auto& v : vr.violations) os << "violation: " << v.message << "\n";
                write_out(os.str(), out_path);
                return kInputError;
            }
        }

        if (build->parsed()) {
            write_out(lc::build_report(inst, opts), out_path);
        } else if (classify->parsed()) {
            write_out(lc::classify_report(inst, opts), out_path);
        } else if (walk->parsed()) {
            opts.resistance_depth = opts.depth;
            write_out(lc::walk_report(inst, opts), out_path);
        } else if (exportc->parsed()) {
            if (format == "structured") {
                if (!inst.is_finite())
                    throw lc::ParseError(
                        "structured export needs a finite complex (rule-backed complexes "
                        "export as DOT with --depth)");
                write_out(lc::export_structured(*inst.finite), out_path);
            } else if (inst.is_finite()) {
                write_out(lc::export_dot(*inst.finite), out_path);
            } else {
                lc::Ball ball = lc::materialize(*inst.rule, opts.depth, 500'000);
                write_out(lc::export_dot(ball), out_path);
            }
        }
        return kOk;
    } catch (const lc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const lc::ScheduleInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const lc::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}
