#include "jsr/polar_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace jsr {

namespace {

void require_same_grid(const PolarNorm& p, const PolarNorm& q) {
    if (p.size() != q.size()) {
        throw GridMismatch("grid mismatch: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()) +
                           " nodes");
    }
}

}  // namespace

PolarNorm::PolarNorm(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < kMinNodes) {
        throw InvalidGauge("polar norm needs at least " + std::to_string(kMinNodes) + " nodes, got " +
                           std::to_string(values_.size()));
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k]) || values_[k] <= 0.0) {
            throw InvalidGauge("gauge value at node " + std::to_string(k) + " must be positive and finite");
        }
    }
}

PolarNorm PolarNorm::constant(std::size_t node_count, double value) {
    return PolarNorm(std::vector<double>(node_count, value));
}

double grid_angle(std::size_t k, std::size_t node_count) {
    const double n = static_cast<double>(node_count);
    return std::numbers::pi * (2.0 * static_cast<double>(k) - n) / n;
}

Vec2 grid_direction(std::size_t k, std::size_t node_count) {
    const double phi = grid_angle(k, node_count);
    return {std::cos(phi), std::sin(phi)};
}

double PolarNorm::node_angle(std::size_t k) const { return grid_angle(k, size()); }

std::optional<std::size_t> PolarNorm::zero_node() const {
    if (size() % 2 != 0) {
        return std::nullopt;
    }
    return size() / 2;
}

double PolarNorm::eval_direction(double phi) const {
    const std::size_t n = size();
    const double nodes = static_cast<double>(n);
    double t = std::fmod((phi / std::numbers::pi + 1.0) * nodes / 2.0, nodes);
    if (t < 0.0) {
        t += nodes;
    }
    auto k = static_cast<std::size_t>(t);
    if (k >= n) {
        k = 0;
        t = 0.0;
    }
    const double frac = t - static_cast<double>(k);
    const std::size_t next = k + 1 == n ? 0 : k + 1;
    return (1.0 - frac) * values_[k] + frac * values_[next];
}

double PolarNorm::eval(const Vec2& x) const {
    const double r = std::hypot(x[0], x[1]);
    if (r == 0.0) {
        return 0.0;
    }
    return r * eval_direction(std::atan2(x[1], x[0]));
}

PolarNorm PolarNorm::scaled(double c) const {
    std::vector<double> out(values_);
    for (double& v : out) {
        v *= c;
    }
    return PolarNorm(std::move(out));
}

std::vector<Vec2> unit_ball(const PolarNorm& p) {
    std::vector<Vec2> points;
    points.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Vec2 u = grid_direction(k, p.size());
        points.push_back({u[0] / p[k], u[1] / p[k]});
    }
    return points;
}

double eccentricity(const PolarNorm& p, const PolarNorm& q) {
    require_same_grid(p, q);
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double ratio = p[k] / q[k];
        hi = std::max(hi, ratio);
        lo = std::min(lo, ratio);
    }
    return hi / lo;
}

double symmetry_defect(const PolarNorm& p) {
    const std::size_t n = p.size();
    if (n % 2 != 0) {
        throw InvalidGauge("symmetry defect needs an even node count, got " + std::to_string(n));
    }
    double defect = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        defect = std::max(defect, std::abs(p[k] - p[(k + n / 2) % n]) / p[k]);
    }
    return defect;
}

double convexity_defect(const PolarNorm& p) {
    const auto ball = unit_ball(p);
    const std::size_t n = ball.size();
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2& a = ball[(k + n - 1) % n];
        const Vec2& b = ball[k];
        const Vec2& c = ball[(k + 1) % n];
        const Vec2 e1{b[0] - a[0], b[1] - a[1]};
        const Vec2 e2{c[0] - b[0], c[1] - b[1]};
        const double turn = (e1[0] * e2[1] - e1[1] * e2[0]) / (std::hypot(e1[0], e1[1]) * std::hypot(e2[0], e2[1]));
        worst = std::min(worst, turn);
    }
    return worst;
}

}  // namespace jsr
