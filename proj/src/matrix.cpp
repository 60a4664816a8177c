#include "jsr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace jsr {

namespace {

// t^2 - 4 det, written without the cancellation of the textbook form
double discriminant(const Mat2& m) {
    const double diff = m.a11 - m.a22;
    return diff * diff + 4.0 * m.a12 * m.a21;
}

constexpr double kScalarTolerance = 1e-12;
constexpr double kCollinearTolerance = 1e-10;
constexpr double kDiscriminantTolerance = 1e-14;

Vec2 unit(const Vec2& v) {
    const double r = std::hypot(v[0], v[1]);
    return {v[0] / r, v[1] / r};
}

// Kernel direction of m - lambda*I; the larger of the two row-derived candidates.
Vec2 kernel_direction(const Mat2& m, double lambda) {
    const Vec2 from_row1{m.a12, lambda - m.a11};
    const Vec2 from_row2{lambda - m.a22, m.a21};
    const double n1 = std::hypot(from_row1[0], from_row1[1]);
    const double n2 = std::hypot(from_row2[0], from_row2[1]);
    return unit(n1 >= n2 ? from_row1 : from_row2);
}

bool is_invariant_under(const Vec2& v, const Mat2& m) {
    const Vec2 w = apply(m, v);
    const double cross = v[0] * w[1] - v[1] * w[0];
    const double scale = std::hypot(v[0], v[1]) * std::hypot(w[0], w[1]);
    return std::abs(cross) <= kCollinearTolerance * scale;
}

}  // namespace

Mat2 Mat2::rotation(double theta, double scale) {
    const double c = scale * std::cos(theta);
    const double s = scale * std::sin(theta);
    return {c, -s, s, c};
}

bool Mat2::is_finite() const {
    return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
}

bool Mat2::is_scalar() const {
    return std::abs(a12) + std::abs(a21) + std::abs(a11 - a22) <= kScalarTolerance * (1.0 + std::abs(a11));
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 operator*(double c, const Mat2& m) { return {c * m.a11, c * m.a12, c * m.a21, c * m.a22}; }

Vec2 apply(const Mat2& m, const Vec2& x) {
    return {m.a11 * x[0] + m.a12 * x[1], m.a21 * x[0] + m.a22 * x[1]};
}

double spectral_radius(const Mat2& m) {
    const double t = m.trace();
    const double disc = discriminant(m);
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        return std::max(std::abs(t + root), std::abs(t - root)) / 2.0;
    }
    // complex pair: |lambda|^2 = det
    return std::sqrt(m.det());
}

double euclidean_operator_norm(const Mat2& m) {
    // m^T m = [[p, q], [q, s]]
    const double p = m.a11 * m.a11 + m.a21 * m.a21;
    const double s = m.a12 * m.a12 + m.a22 * m.a22;
    const double q = m.a11 * m.a12 + m.a21 * m.a22;
    const double largest = 0.5 * (p + s + std::hypot(p - s, 2.0 * q));
    return std::sqrt(std::max(largest, 0.0));
}

std::vector<Vec2> eigen_directions(const Mat2& m) {
    if (m.is_scalar()) {
        return {};
    }
    const double t = m.trace();
    const double d = m.det();
    const double disc = discriminant(m);
    const double slack = kDiscriminantTolerance * (t * t + 4.0 * std::abs(d));
    if (disc < -slack) {
        return {};
    }
    if (disc <= slack) {
        // double eigenvalue of a non-scalar matrix: a single Jordan block
        return {kernel_direction(m, t / 2.0)};
    }
    const double root = std::sqrt(disc);
    return {kernel_direction(m, (t + root) / 2.0), kernel_direction(m, (t - root) / 2.0)};
}

MatrixSet::MatrixSet(std::vector<Mat2> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) {
        throw InvalidMatrixSet("matrix set must contain at least one matrix");
    }
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        if (!matrices_[i].is_finite()) {
            throw InvalidMatrixSet("matrix " + std::to_string(i) + " has a non-finite entry");
        }
    }
}

MatrixSet MatrixSet::scaled(double c) const {
    std::vector<Mat2> out;
    out.reserve(matrices_.size());
    for (const auto& m : matrices_) {
        out.push_back(c * m);
    }
    return MatrixSet(std::move(out));
}

std::optional<Vec2> common_invariant_line(const MatrixSet& s) {
    const auto first = std::find_if(s.begin(), s.end(), [](const Mat2& m) { return !m.is_scalar(); });
    if (first == s.end()) {
        return Vec2{1.0, 0.0};
    }
    for (const Vec2& v : eigen_directions(*first)) {
        const bool shared = std::all_of(s.begin(), s.end(), [&](const Mat2& m) { return is_invariant_under(v, m); });
        if (shared) {
            return v;
        }
    }
    return std::nullopt;
}

std::string to_string(const Mat2& m) {
    std::ostringstream os;
    os << "[[" << m.a11 << ", " << m.a12 << "], [" << m.a21 << ", " << m.a22 << "]]";
    return os.str();
}

}  // namespace jsr
