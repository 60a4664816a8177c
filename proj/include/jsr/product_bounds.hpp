#pragma once

#include <cstdint>
#include <stdexcept>

#include "jsr/matrix.hpp"
#include "jsr/polar_norm.hpp"

namespace jsr {

inline constexpr std::uint64_t kDefaultProductCap = std::uint64_t{1} << 20;

class ProductCapExceeded : public std::runtime_error {
public:
    ProductCapExceeded(std::uint64_t requested, std::uint64_t cap);
    std::uint64_t requested() const { return requested_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

/// Estimates from all r^n products of length n:
///   lower = max rho(P)^(1/n)     (a lower bound on the joint spectral radius)
///   upper = max ||P||_2^(1/n)    (an upper bound)
///   trace = max |tr P|^(1/n)     (converges along a subsequence; not a bound at fixed n)
struct BoundReport {
    unsigned n = 0;
    double lower = 0.0;
    double upper = 0.0;
    double trace = 0.0;
    std::uint64_t products_evaluated = 0;
};

/// Single depth-first pass computing all three estimates.
BoundReport product_bounds(const MatrixSet& s, unsigned n, std::uint64_t cap = kDefaultProductCap);

double lower_bound(const MatrixSet& s, unsigned n, std::uint64_t cap = kDefaultProductCap);
double upper_bound(const MatrixSet& s, unsigned n, std::uint64_t cap = kDefaultProductCap);
double trace_estimate(const MatrixSet& s, unsigned n, std::uint64_t cap = kDefaultProductCap);

/// max over grid directions x_k of max_i ||A_i x_k|| / ||x_k|| - rho, all in `norm`.
/// Nonpositive values certify ||A_i|| <= rho at grid resolution.
double extremal_norm_residual(const PolarNorm& norm, const MatrixSet& s, double rho);

}  // namespace jsr
