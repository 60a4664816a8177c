#include "jsr/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "jsr/emitters.hpp"
#include "jsr/problem_io.hpp"
#include "jsr/product_bounds.hpp"

namespace jsr::cli {

namespace {

struct ComputeOptions {
    std::string problem;
    std::optional<std::size_t> nodes;
    std::optional<double> tolerance;
    std::optional<std::size_t> max_iterations;
    std::optional<std::string> averaging;
    bool allow_reducible = false;
    std::string history_csv;
    std::string ball_csv;
    std::string svg;
    bool show_images = false;
    bool json = false;
};

struct BoundsOptions {
    std::string problem;
    unsigned length = 1;
};

std::uint64_t product_cap_from_env() {
    const char* raw = std::getenv("JSR_PRODUCT_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultProductCap;
    }
    const std::string text(raw);
    std::uint64_t cap = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || end != text.data() + text.size() || cap == 0) {
        throw ProblemError("JSR_PRODUCT_CAP must be a positive integer, got '" + text + "'");
    }
    return cap;
}

int compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    Problem problem = parse_problem(opt.problem);
    RunConfig& cfg = problem.config;
    if (opt.nodes) {
        cfg.node_count = *opt.nodes;
    }
    if (opt.tolerance) {
        cfg.tol_abs = *opt.tolerance;
    }
    if (opt.max_iterations) {
        cfg.max_iterations = *opt.max_iterations;
    }
    if (opt.averaging) {
        cfg.averaging = parse_averaging(*opt.averaging);
    }
    cfg.allow_reducible = cfg.allow_reducible || opt.allow_reducible;
    cfg.validate();

    if (cfg.allow_reducible) {
        if (const auto line = common_invariant_line(problem.matrices)) {
            err << "warning: matrix set is reducible (common invariant line through (" << (*line)[0] << ", "
                << (*line)[1] << ")); the iteration may not converge\n";
        }
    }

    RunResult result;
    try {
        result = run(problem.matrices, cfg);
    } catch (const ReducibleSet& e) {
        err << "error: " << e.what() << " (pass --allow-reducible to run anyway)\n";
        return kReducible;
    }

    if (opt.json) {
        out << result_json(result) << '\n';
    } else {
        out << summary_line(result) << '\n';
    }
    if (!opt.history_csv.empty()) {
        emit_history_csv(result.history, opt.history_csv);
    }
    if (!opt.ball_csv.empty()) {
        emit_ball_csv(result.norm, opt.ball_csv);
    }
    if (!opt.svg.empty()) {
        emit_ball_svg(result.norm, precompute(problem.matrices, cfg.node_count), result.rho_estimate, opt.svg,
                      opt.show_images);
    }
    return result.status == RunStatus::converged ? kConverged : kMaxIterations;
}

int bounds(const BoundsOptions& opt, std::ostream& out) {
    const Problem problem = parse_problem(opt.problem);
    const BoundReport report = product_bounds(problem.matrices, opt.length, product_cap_from_env());
    out << "n=" << report.n << " lower=" << format_real(report.lower) << " upper=" << format_real(report.upper)
        << " trace=" << format_real(report.trace) << " products=" << report.products_evaluated << '\n';
    return kConverged;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Joint spectral radius of 2x2 matrix sets via max-relaxation Barabanov norms", "jsr"};
    app.require_subcommand(1);

    ComputeOptions compute_opt;
    auto* compute_cmd = app.add_subcommand("compute", "Iterate to a Barabanov norm and bound the joint spectral radius");
    compute_cmd->add_option("problem", compute_opt.problem, "Problem file (JSON)")->required();
    compute_cmd->add_option("--nodes", compute_opt.nodes, "Grid size (even, >= 8)");
    compute_cmd->add_option("--tol", compute_opt.tolerance, "Absolute gap rho_plus - rho_minus to stop at");
    compute_cmd->add_option("--max-iters", compute_opt.max_iterations, "Maximum number of relaxation updates");
    compute_cmd->add_option("--averaging", compute_opt.averaging, "arithmetic | geometric | harmonic");
    compute_cmd->add_flag("--allow-reducible", compute_opt.allow_reducible, "Run even if the set is reducible");
    compute_cmd->add_option("--history", compute_opt.history_csv, "Write per-iteration bounds as CSV");
    compute_cmd->add_option("--ball", compute_opt.ball_csv, "Write the unit-ball polyline as CSV");
    compute_cmd->add_option("--svg", compute_opt.svg, "Write an SVG plot of the unit ball");
    compute_cmd->add_flag("--show-images", compute_opt.show_images, "Also plot the curves ||A_i x|| = rho");
    compute_cmd->add_flag("--json", compute_opt.json, "Print the result as JSON");

    BoundsOptions bounds_opt;
    auto* bounds_cmd = app.add_subcommand("bounds", "Brute-force product bounds for one product length");
    bounds_cmd->add_option("problem", bounds_opt.problem, "Problem file (JSON)")->required();
    bounds_cmd->add_option("--length,-n", bounds_opt.length, "Product length n")->required()->check(
        CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kConverged;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kConverged;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*compute_cmd) {
            return compute(compute_opt, out, err);
        }
        return bounds(bounds_opt, out);
    } catch (const ProblemError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ProductCapExceeded& e) {
        err << "error: " << e.what() << " (raise JSR_PRODUCT_CAP to allow it)\n";
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

}  // namespace jsr::cli
