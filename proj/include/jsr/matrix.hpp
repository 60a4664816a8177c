#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jsr {

using Vec2 = std::array<double, 2>;

/// Real 2x2 matrix, stored row-major.
struct Mat2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 rotation(double theta, double scale = 1.0);

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
    bool is_finite() const;
    bool is_scalar() const;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(double c, const Mat2& m);

Vec2 apply(const Mat2& m, const Vec2& x);

/// Largest eigenvalue magnitude, from the characteristic polynomial.
double spectral_radius(const Mat2& m);

/// Largest singular value (operator norm induced by the Euclidean norm).
double euclidean_operator_norm(const Mat2& m);

/// Real eigendirections of a non-scalar matrix: zero, one or two unit vectors.
std::vector<Vec2> eigen_directions(const Mat2& m);

class InvalidMatrixSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nonempty ordered collection of finite 2x2 matrices.
class MatrixSet {
public:
    explicit MatrixSet(std::vector<Mat2> matrices);

    std::size_t size() const { return matrices_.size(); }
    const Mat2& operator[](std::size_t i) const { return matrices_[i]; }
    const std::vector<Mat2>& matrices() const { return matrices_; }
    auto begin() const { return matrices_.begin(); }
    auto end() const { return matrices_.end(); }

    /// Every matrix multiplied by c.
    MatrixSet scaled(double c) const;

    friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

private:
    std::vector<Mat2> matrices_;
};

/// A line through the origin left invariant by every matrix of the set, if any.
/// When all matrices are scalar every line is invariant and (1, 0) is returned.
std::optional<Vec2> common_invariant_line(const MatrixSet& s);

inline bool is_irreducible(const MatrixSet& s) { return !common_invariant_line(s).has_value(); }

std::string to_string(const Mat2& m);

}  // namespace jsr
