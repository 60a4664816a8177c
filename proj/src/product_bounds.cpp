#include "jsr/product_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace jsr {

ProductCapExceeded::ProductCapExceeded(std::uint64_t requested, std::uint64_t cap)
    : std::runtime_error("product enumeration needs " + std::to_string(requested) +
                         " products, above the cap of " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

namespace {

// r^n, saturating just above the cap so huge requests are reported without overflow.
std::uint64_t word_count(std::uint64_t r, unsigned n, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (unsigned j = 0; j < n; ++j) {
        if (count > cap / r) {
            return cap + 1;
        }
        count *= r;
    }
    return count;
}

struct Maxima {
    double rho = 0.0;
    double norm = 0.0;
    double trace = 0.0;
    std::uint64_t visited = 0;
};

// Extends `prefix` by every letter; leaves are products of length n.
void enumerate(const MatrixSet& s, const Mat2& prefix, unsigned remaining, Maxima& acc) {
    for (const Mat2& a : s) {
        const Mat2 product = a * prefix;
        if (remaining == 1) {
            acc.rho = std::max(acc.rho, spectral_radius(product));
            acc.norm = std::max(acc.norm, euclidean_operator_norm(product));
            acc.trace = std::max(acc.trace, std::abs(product.trace()));
            ++acc.visited;
        } else {
            enumerate(s, product, remaining - 1, acc);
        }
    }
}

}  // namespace

BoundReport product_bounds(const MatrixSet& s, unsigned n, std::uint64_t cap) {
    if (n == 0) {
        throw std::invalid_argument("product length must be positive");
    }
    const std::uint64_t words = word_count(s.size(), n, cap);
    if (words > cap) {
        std::uint64_t requested = words;
        // report the true count when it fits in 64 bits
        const double exact = std::pow(static_cast<double>(s.size()), n);
        if (exact < 1.8e19) {
            requested = static_cast<std::uint64_t>(exact);
        }
        throw ProductCapExceeded(requested, cap);
    }

    Maxima acc;
    enumerate(s, Mat2::identity(), n, acc);

    const double root = 1.0 / static_cast<double>(n);
    return BoundReport{n, std::pow(acc.rho, root), std::pow(acc.norm, root), std::pow(acc.trace, root),
                       acc.visited};
}

double lower_bound(const MatrixSet& s, unsigned n, std::uint64_t cap) { return product_bounds(s, n, cap).lower; }

double upper_bound(const MatrixSet& s, unsigned n, std::uint64_t cap) { return product_bounds(s, n, cap).upper; }

double trace_estimate(const MatrixSet& s, unsigned n, std::uint64_t cap) { return product_bounds(s, n, cap).trace; }

double extremal_norm_residual(const PolarNorm& norm, const MatrixSet& s, double rho) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("rho must be positive");
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < norm.size(); ++k) {
        const Vec2 x = grid_direction(k, norm.size());
        const double base = norm.eval(x);
        double image = 0.0;
        for (const Mat2& a : s) {
            image = std::max(image, norm.eval(apply(a, x)));
        }
        worst = std::max(worst, image / base - rho);
    }
    return worst;
}

}  // namespace jsr
