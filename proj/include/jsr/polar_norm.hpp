#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "jsr/matrix.hpp"

namespace jsr {

class GridMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidGauge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A planar norm given by its radial gauge R(phi) = ||(cos phi, sin phi)||,
/// sampled at N uniform nodes phi_k = -pi + 2*pi*k/N and interpolated
/// linearly in phi with period 2*pi.  ||x|| = |x| * R(arg x).
class PolarNorm {
public:
    static constexpr std::size_t kMinNodes = 8;

    explicit PolarNorm(std::vector<double> values);
    static PolarNorm constant(std::size_t node_count, double value = 1.0);

    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t k) const { return values_[k]; }

    /// Angle of node k; node N/2 of an even grid is exactly zero.
    double node_angle(std::size_t k) const;
    /// Index of the node at phi = 0, present iff N is even.
    std::optional<std::size_t> zero_node() const;

    /// R(phi), for any finite phi.
    double eval_direction(double phi) const;
    /// ||x||; zero at the origin.
    double eval(const Vec2& x) const;

    PolarNorm scaled(double c) const;

    friend bool operator==(const PolarNorm&, const PolarNorm&) = default;

private:
    std::vector<double> values_;
};

/// Unit direction of node k on an N-point grid.
Vec2 grid_direction(std::size_t k, std::size_t node_count);
double grid_angle(std::size_t k, std::size_t node_count);

/// Vertices (cos phi_k, sin phi_k) / R_k of the discretized unit sphere.
std::vector<Vec2> unit_ball(const PolarNorm& p);

/// (max_k p_k/q_k) / (min_k p_k/q_k); 1 iff the norms are proportional on the grid.
double eccentricity(const PolarNorm& p, const PolarNorm& q);

/// max_k |R_k - R_{k+N/2}| / R_k.  Requires even N.
double symmetry_defect(const PolarNorm& p);

/// Smallest normalized turning (sine of the exterior angle) along the ball
/// polyline.  Nonnegative iff the polyline is convex.
double convexity_defect(const PolarNorm& p);

inline constexpr double kSymmetryTolerance = 1e-9;
inline constexpr double kConvexityTolerance = 1e-6;

}  // namespace jsr
