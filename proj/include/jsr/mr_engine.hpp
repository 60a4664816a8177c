#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jsr/matrix.hpp"
#include "jsr/polar_norm.hpp"

namespace jsr {

/// Mean used to pick the relaxation factor between the current bounds.
enum class Averaging { arithmetic, geometric, harmonic };

std::string_view to_string(Averaging rule);
/// Throws std::invalid_argument for unknown names.
Averaging parse_averaging(std::string_view name);

/// gamma(t, s) for t, s > 0.
double average(Averaging rule, double t, double s);

/// Per-matrix image data on the grid: A_i u_k = gain[i][k] * (cos angle[i][k], sin angle[i][k]).
/// A zero gain marks a direction annihilated by A_i; its angle is not meaningful.
struct TransformTables {
    std::size_t node_count = 0;
    std::vector<std::vector<double>> gain;
    std::vector<std::vector<double>> angle;

    std::size_t matrix_count() const { return gain.size(); }
};

TransformTables precompute(const MatrixSet& s, std::size_t node_count);

/// R*(phi_k) = max_i gain_i(phi_k) * R(angle_i(phi_k)), i.e. max_i ||A_i u_k||.
std::vector<double> images_gauge(const TransformTables& tables, const PolarNorm& gauge);

struct BoundPair {
    double rho_minus = 0.0;
    double rho_plus = 0.0;
};

/// Node-wise extrema of R*/R.
BoundPair bounds(const PolarNorm& gauge, std::span<const double> images);

/// max(R_k, R*_k / gamma) at every node.
PolarNorm relax(const PolarNorm& gauge, std::span<const double> images, double gamma);

/// Rescales so that the value at phi = 0 is exactly 1.
PolarNorm normalize(const PolarNorm& gauge);

struct IterationRecord {
    std::size_t n = 0;
    double rho_minus = 0.0;
    double rho_plus = 0.0;
    double gamma = 0.0;

    double gap() const { return rho_plus - rho_minus; }
};

/// One relaxation update: images -> bounds -> gamma -> relax -> normalize.
/// The record's `n` is left at zero for the caller to fill in.
std::pair<IterationRecord, PolarNorm> step(const TransformTables& tables, const PolarNorm& gauge, Averaging rule);

struct RunConfig {
    std::size_t node_count = 3000;
    double tol_abs = 1e-3;
    std::size_t max_iterations = 1000;
    Averaging averaging = Averaging::arithmetic;
    bool allow_reducible = false;

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class RunStatus { converged, max_iters_exceeded };

std::string_view to_string(RunStatus status);

struct RunResult {
    RunStatus status = RunStatus::max_iters_exceeded;
    double rho_lower = 0.0;
    double rho_upper = 0.0;
    double rho_estimate = 0.0;
    PolarNorm norm = PolarNorm::constant(PolarNorm::kMinNodes);
    std::vector<IterationRecord> history;
    double residual = 0.0;

    /// Number of relaxation updates applied to reach `norm`.
    std::size_t iterations() const { return history.empty() ? 0 : history.back().n; }
};

class ReducibleSet : public std::invalid_argument {
public:
    explicit ReducibleSet(const Vec2& line);
    const Vec2& line() const { return line_; }

private:
    Vec2 line_;
};

/// Iterates from the Euclidean gauge until rho_plus - rho_minus <= tol_abs
/// or max_iterations updates have been applied.  Record n of the history
/// holds the bounds of the n-th normalized gauge; the returned norm is the
/// last gauge whose bounds were evaluated.
RunResult run(const MatrixSet& s, const RunConfig& cfg);

/// Same as run() but reuses prebuilt tables; `on_iterate` sees every gauge
/// whose bounds are recorded, in order.
template <typename Observer>
RunResult run_observed(const TransformTables& tables, const RunConfig& cfg, Observer&& on_iterate);

/// max_k |R*_k / R_k - rho|: zero iff rho ||x|| = max_i ||A_i x|| on the grid.
double barabanov_residual(const TransformTables& tables, const PolarNorm& gauge, double rho);

/// Number of cyclically adjacent node pairs whose dominant matrix differs.
/// Ties go to the lowest index.  Requires at least two matrices.
std::size_t active_switch_count(const TransformTables& tables, const PolarNorm& gauge);

/// Dominant matrix index at every node, ties to the lowest index.
std::vector<std::size_t> dominant_matrices(const TransformTables& tables, const PolarNorm& gauge);

namespace detail {
RunResult finish(RunStatus status, const IterationRecord& last, PolarNorm norm, std::vector<IterationRecord> history,
                 const TransformTables& tables);
}

template <typename Observer>
RunResult run_observed(const TransformTables& tables, const RunConfig& cfg, Observer&& on_iterate) {
    cfg.validate();
    if (tables.node_count != cfg.node_count) {
        throw GridMismatch("transform tables built for " + std::to_string(tables.node_count) +
                           " nodes, config asks for " + std::to_string(cfg.node_count));
    }
    std::vector<IterationRecord> history;
    PolarNorm gauge = PolarNorm::constant(cfg.node_count);
    for (std::size_t n = 0;; ++n) {
        on_iterate(std::as_const(gauge));
        auto [record, next] = step(tables, gauge, cfg.averaging);
        record.n = n;
        history.push_back(record);
        if (record.gap() <= cfg.tol_abs) {
            return detail::finish(RunStatus::converged, record, std::move(gauge), std::move(history), tables);
        }
        if (n == cfg.max_iterations) {
            return detail::finish(RunStatus::max_iters_exceeded, record, std::move(gauge), std::move(history), tables);
        }
        gauge = std::move(next);
    }
}

}  // namespace jsr
