#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "jsr/mr_engine.hpp"
#include "jsr/polar_norm.hpp"

namespace jsr {

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Locale-independent round-trip formatting (17 significant digits).
std::string format_real(double value);
/// Locale-independent parse of a full token; throws std::invalid_argument.
double parse_real(std::string_view token);

/// `iteration,rho_minus,rho_plus,gamma` followed by one row per record.
void emit_history_csv(const std::vector<IterationRecord>& history, const std::filesystem::path& path);
std::vector<IterationRecord> read_history_csv(const std::filesystem::path& path);

/// `phi,R,x,y`, one row per node in grid order; (x, y) is the unit-ball vertex.
void emit_ball_csv(const PolarNorm& norm, const std::filesystem::path& path);

struct SvgCurve {
    std::vector<Vec2> points;
    bool closed = true;
};

/// Curves drawn by emit_ball_svg: the unit sphere first, then, per matrix,
/// the locus ||A_i x|| = rho (nodes where A_i vanishes are skipped).
std::vector<SvgCurve> ball_figure_curves(const PolarNorm& norm, const TransformTables& tables, double rho,
                                         bool show_images);

/// Standalone SVG, y axis up, square viewBox padded 10% past the largest curve extent.
std::string ball_svg(const PolarNorm& norm, const TransformTables& tables, double rho, bool show_images);
void emit_ball_svg(const PolarNorm& norm, const TransformTables& tables, double rho, const std::filesystem::path& path,
                   bool show_images);

/// `rho_estimate=<v> rho_lower=<v> rho_upper=<v> iterations=<n> residual=<v> status=<s>`
std::string summary_line(const RunResult& result);
std::string result_json(const RunResult& result);

}  // namespace jsr
