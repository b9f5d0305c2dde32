#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spcone/io.hpp"

namespace {

using namespace spcone;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

FunctionFamily parse_family_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        return FunctionFamily::make(family_kind_from_string(spec));
    }
    const FamilyKind kind = family_kind_from_string(spec.substr(0, colon));
    return FunctionFamily::make(kind, std::stod(spec.substr(colon + 1)));
}

std::vector<FunctionFamily> default_families() {
    return {FunctionFamily::neglog(), FunctionFamily::negentropy(), FunctionFamily::power(1.5),
            FunctionFamily::power(0.5)};
}

void emit(const Json& j, const std::string& output, bool pretty) {
    if (output.empty()) {
        std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    } else {
        write_json_file(output, j, pretty);
    }
}

int cmd_eval(const std::string& input, const std::string& output,
             const std::string& family_spec, double tol, bool pretty) {
    const Json doc = load_json_file(input);
    FunctionFamily family = FunctionFamily::neglog();
    Json point_doc = doc;
    if (doc.contains("family")) {
        family = family_from_json(doc.at("family"));
        if (doc.contains("point")) point_doc = doc.at("point");
    }
    if (!family_spec.empty()) family = parse_family_spec(family_spec);
    const ConePoint pt = point_from_json(point_doc);

    Json out;
    out["family"] = family_to_json(family);
    const bool interior = in_interior(family, pt, tol);
    out["interior"] = interior;
    if (pt.v > 0.0 && is_positive_definite(pt.w)) out["zeta"] = zeta(family, pt);
    if (interior) {
        BarrierContext ctx(family, pt);
        const Vector g = ctx.gradient();
        out["gamma"] = ctx.value();
        Json grad = Json::array();
        for (Eigen::Index i = 0; i < g.size(); ++i) grad.push_back(g[i]);
        out["grad"] = grad;
        out["euler_residual"] = std::abs(g.dot(pt.packed()) + ctx.nu());
    }
    emit(out, output, pretty);
    return kExitOk;
}

int cmd_verify(const std::string& output, const std::vector<std::string>& family_specs,
               const std::vector<int>& dims, int trials, std::uint64_t seed, double tol_scale,
               bool negative_control, bool pretty) {
    std::vector<FunctionFamily> families;
    if (family_specs.empty()) {
        families = default_families();
    } else {
        for (const auto& s : family_specs) families.push_back(parse_family_spec(s));
    }
    std::vector<int> sides = dims.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6} : dims;

    Json configs = Json::array();
    bool all_passed = true;
    bool control_detected = false;
    for (const auto& family : families) {
        for (int d : sides) {
            TrialConfig cfg;
            cfg.family = family;
            cfg.side = d;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.negative_control = negative_control;
            if (tol_scale != 1.0) {
                for (double* s : {&cfg.tol.log_homogeneity, &cfg.tol.compatibility,
                                  &cfg.tol.self_concordance, &cfg.tol.barrier_parameter,
                                  &cfg.tol.euler_grad, &cfg.tol.euler_hess, &cfg.tol.monotonicity,
                                  &cfg.tol.fd_grad, &cfg.tol.fd_hess, &cfg.tol.fd_d3}) {
                    *s *= tol_scale;
                }
            }
            const TrialReport report = run_suite(cfg);
            all_passed = all_passed && report.all_passed();
            control_detected = control_detected || report.control_detected();
            configs.push_back(report_to_json(report));
        }
    }
    Json out;
    out["configs"] = configs;
    out["all_passed"] = all_passed;
    if (negative_control) out["control_detected"] = control_detected;
    emit(out, output, pretty);
    return all_passed ? kExitOk : kExitCheckFailure;
}

int cmd_solve(const std::string& input, const std::string& output, int max_iters, double gap_tol,
              bool pretty) {
    const ConicProblem problem = problem_from_json(load_json_file(input));
    SolverConfig config;
    if (max_iters > 0) config.max_iters = max_iters;
    config.gap_tol = gap_tol;
    const SolveResult result = solve(problem, config);
    emit(result_to_json(result), output, pretty);
    return result.status == SolveStatus::Optimal ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Barrier oracles, verifier and solver for the epigraph-of-perspective cone of tr g(W)"};
    app.require_subcommand(1);

    std::string input, output;
    std::string family_spec;
    std::vector<std::string> family_specs;
    std::vector<int> dims;
    std::uint64_t seed = 20240314;
    int trials = 1000;
    double tol = 1e-12;
    double tol_scale = 1.0;
    int max_iters = 0;
    double gap_tol = 1e-7;
    bool pretty = false;
    bool negative_control = false;

    app.add_flag("--pretty", pretty, "pretty-print JSON output");

    auto* eval = app.add_subcommand("eval", "evaluate zeta, the barrier and its gradient at a point");
    eval->add_option("--input", input, "point file (JSON)")->required();
    eval->add_option("--output", output, "output file (default: stdout)");
    eval->add_option("--family", family_spec, "family override, e.g. neglog or power:1.5");
    eval->add_option("--tol", tol, "interior tolerance");

    auto* verify = app.add_subcommand("verify", "run the property-based barrier verification suite");
    verify->add_option("--output", output, "report file (default: stdout)");
    verify->add_option("--family", family_specs, "families to test (default: all four)");
    verify->add_option("--dim", dims, "matrix sides to test (default: 1..6)");
    verify->add_option("--trials", trials, "trials per (family, dim)");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--tol", tol_scale, "scale factor applied to all check slacks");
    verify->add_flag("--negative-control", negative_control,
                     "also run the inadmissible g(x) = x^3 monotonicity control");

    auto* solve_cmd = app.add_subcommand("solve", "path-following solve of a conic problem file");
    solve_cmd->add_option("--input", input, "problem file (JSON)")->required();
    solve_cmd->add_option("--output", output, "result file (default: stdout)");
    solve_cmd->add_option("--max-iters", max_iters, "Newton-step budget");
    solve_cmd->add_option("--gap-tol", gap_tol, "duality-gap tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(input, output, family_spec, tol, pretty);
        if (verify->parsed())
            return cmd_verify(output, family_specs, dims, trials, seed, tol_scale,
                              negative_control, pretty);
        return cmd_solve(input, output, max_iters, gap_tol, pretty);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
