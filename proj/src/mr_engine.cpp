#include "jsr/mr_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jsr {

namespace {

constexpr double kZeroGainTolerance = 1e-14;

}  // namespace

std::string_view to_string(Averaging rule) {
    switch (rule) {
        case Averaging::arithmetic:
            return "arithmetic";
        case Averaging::geometric:
            return "geometric";
        case Averaging::harmonic:
            return "harmonic";
    }
    return "unknown";
}

Averaging parse_averaging(std::string_view name) {
    for (auto rule : {Averaging::arithmetic, Averaging::geometric, Averaging::harmonic}) {
        if (name == to_string(rule)) {
            return rule;
        }
    }
    throw std::invalid_argument("unknown averaging rule '" + std::string(name) +
                                "' (expected arithmetic, geometric or harmonic)");
}

double average(Averaging rule, double t, double s) {
    if (!(t > 0.0) || !(s > 0.0)) {
        throw std::domain_error("averaging needs positive arguments, got " + std::to_string(t) + " and " +
                                std::to_string(s));
    }
    if (t == s) {
        return t;
    }
    switch (rule) {
        case Averaging::arithmetic:
            return 0.5 * (t + s);
        case Averaging::geometric:
            return std::sqrt(t) * std::sqrt(s);
        case Averaging::harmonic:
            return 2.0 * t * s / (t + s);
    }
    return 0.5 * (t + s);
}

TransformTables precompute(const MatrixSet& s, std::size_t node_count) {
    if (node_count < PolarNorm::kMinNodes) {
        throw std::invalid_argument("node count must be at least " + std::to_string(PolarNorm::kMinNodes));
    }
    TransformTables tables;
    tables.node_count = node_count;
    tables.gain.assign(s.size(), std::vector<double>(node_count, 0.0));
    tables.angle.assign(s.size(), std::vector<double>(node_count, std::numeric_limits<double>::quiet_NaN()));
    // gains at the rounding level of the entries count as an annihilated direction
    std::vector<double> zero_gain(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Mat2& m = s[i];
        zero_gain[i] = kZeroGainTolerance * std::sqrt(m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22);
    }
    for (std::size_t k = 0; k < node_count; ++k) {
        const Vec2 u = grid_direction(k, node_count);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Vec2 y = apply(s[i], u);
            const double gain = std::hypot(y[0], y[1]);
            if (gain > zero_gain[i]) {
                tables.gain[i][k] = gain;
                tables.angle[i][k] = std::atan2(y[1], y[0]);
            }
        }
    }
    return tables;
}

namespace {

void require_grid(const TransformTables& tables, const PolarNorm& gauge) {
    if (tables.node_count != gauge.size()) {
        throw GridMismatch("transform tables have " + std::to_string(tables.node_count) + " nodes, gauge has " +
                           std::to_string(gauge.size()));
    }
}

double image_value(const TransformTables& tables, const PolarNorm& gauge, std::size_t i, std::size_t k) {
    const double gain = tables.gain[i][k];
    return gain > 0.0 ? gain * gauge.eval_direction(tables.angle[i][k]) : 0.0;
}

}  // namespace

std::vector<double> images_gauge(const TransformTables& tables, const PolarNorm& gauge) {
    require_grid(tables, gauge);
    std::vector<double> out(tables.node_count, 0.0);
    for (std::size_t i = 0; i < tables.matrix_count(); ++i) {
        for (std::size_t k = 0; k < tables.node_count; ++k) {
            out[k] = std::max(out[k], image_value(tables, gauge, i, k));
        }
    }
    return out;
}

BoundPair bounds(const PolarNorm& gauge, std::span<const double> images) {
    if (images.size() != gauge.size()) {
        throw GridMismatch("image gauge has " + std::to_string(images.size()) + " nodes, gauge has " +
                           std::to_string(gauge.size()));
    }
    BoundPair out{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t k = 0; k < gauge.size(); ++k) {
        const double ratio = images[k] / gauge[k];
        out.rho_minus = std::min(out.rho_minus, ratio);
        out.rho_plus = std::max(out.rho_plus, ratio);
    }
    return out;
}

PolarNorm relax(const PolarNorm& gauge, std::span<const double> images, double gamma) {
    if (!(gamma > 0.0)) {
        throw std::domain_error("relaxation factor must be positive");
    }
    if (images.size() != gauge.size()) {
        throw GridMismatch("image gauge has " + std::to_string(images.size()) + " nodes, gauge has " +
                           std::to_string(gauge.size()));
    }
    std::vector<double> out(gauge.size());
    for (std::size_t k = 0; k < gauge.size(); ++k) {
        out[k] = std::max(gauge[k], images[k] / gamma);
    }
    return PolarNorm(std::move(out));
}

PolarNorm normalize(const PolarNorm& gauge) {
    const auto zero = gauge.zero_node();
    if (!zero) {
        throw InvalidGauge("normalization needs a node at phi = 0 (even node count), got " +
                           std::to_string(gauge.size()) + " nodes");
    }
    const double reference = gauge[*zero];
    std::vector<double> out(gauge.values().begin(), gauge.values().end());
    for (double& v : out) {
        v /= reference;
    }
    return PolarNorm(std::move(out));
}

std::pair<IterationRecord, PolarNorm> step(const TransformTables& tables, const PolarNorm& gauge, Averaging rule) {
    const auto images = images_gauge(tables, gauge);
    const auto [rho_minus, rho_plus] = bounds(gauge, images);
    const double gamma = average(rule, rho_minus, rho_plus);
    IterationRecord record{0, rho_minus, rho_plus, gamma};
    return {record, normalize(relax(gauge, images, gamma))};
}

void RunConfig::validate() const {
    if (node_count < PolarNorm::kMinNodes || node_count % 2 != 0) {
        throw std::invalid_argument("node count must be even and at least " + std::to_string(PolarNorm::kMinNodes) +
                                    ", got " + std::to_string(node_count));
    }
    if (!(tol_abs > 0.0) || !std::isfinite(tol_abs)) {
        throw std::invalid_argument("tolerance must be positive and finite");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
}

std::string_view to_string(RunStatus status) {
    return status == RunStatus::converged ? "converged" : "max_iters_exceeded";
}

namespace {

std::string describe_line(const Vec2& v) {
    return "common invariant line through (" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ")";
}

}  // namespace

ReducibleSet::ReducibleSet(const Vec2& line)
    : std::invalid_argument("matrix set is reducible: " + describe_line(line)), line_(line) {}

RunResult run(const MatrixSet& s, const RunConfig& cfg) {
    cfg.validate();
    if (!cfg.allow_reducible) {
        if (const auto line = common_invariant_line(s)) {
            throw ReducibleSet(*line);
        }
    }
    return run_observed(precompute(s, cfg.node_count), cfg, [](const PolarNorm&) {});
}

double barabanov_residual(const TransformTables& tables, const PolarNorm& gauge, double rho) {
    if (!(rho > 0.0)) {
        throw std::domain_error("rho must be positive");
    }
    const auto images = images_gauge(tables, gauge);
    double worst = 0.0;
    for (std::size_t k = 0; k < gauge.size(); ++k) {
        worst = std::max(worst, std::abs(images[k] / gauge[k] - rho));
    }
    return worst;
}

std::vector<std::size_t> dominant_matrices(const TransformTables& tables, const PolarNorm& gauge) {
    require_grid(tables, gauge);
    std::vector<std::size_t> winner(tables.node_count, 0);
    for (std::size_t k = 0; k < tables.node_count; ++k) {
        double best = image_value(tables, gauge, 0, k);
        for (std::size_t i = 1; i < tables.matrix_count(); ++i) {
            const double value = image_value(tables, gauge, i, k);
            if (value > best) {
                best = value;
                winner[k] = i;
            }
        }
    }
    return winner;
}

std::size_t active_switch_count(const TransformTables& tables, const PolarNorm& gauge) {
    if (tables.matrix_count() < 2) {
        throw std::invalid_argument("switch count needs at least two matrices");
    }
    const auto winner = dominant_matrices(tables, gauge);
    std::size_t switches = 0;
    for (std::size_t k = 0; k < winner.size(); ++k) {
        if (winner[k] != winner[(k + 1) % winner.size()]) {
            ++switches;
        }
    }
    return switches;
}

namespace detail {

RunResult finish(RunStatus status, const IterationRecord& last, PolarNorm norm, std::vector<IterationRecord> history,
                 const TransformTables& tables) {
    RunResult result;
    result.status = status;
    result.rho_lower = last.rho_minus;
    result.rho_upper = last.rho_plus;
    result.rho_estimate = 0.5 * (last.rho_minus + last.rho_plus);
    result.residual = barabanov_residual(tables, norm, result.rho_estimate);
    result.norm = std::move(norm);
    result.history = std::move(history);
    return result;
}

}  // namespace detail

}  // namespace jsr
