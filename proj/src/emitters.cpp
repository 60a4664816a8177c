#include "jsr/emitters.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jsr {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw OutputError(path.string() + ": cannot open for writing");
    }
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw OutputError(path.string() + ": write failed");
    }
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string::npos) {
            return fields;
        }
        start = pos + 1;
    }
}

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string format_real(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw OutputError("cannot format number");
    }
    return std::string(buffer, end);
}

double parse_real(std::string_view token) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw std::invalid_argument("not a number: '" + std::string(token) + "'");
    }
    return value;
}

void emit_history_csv(const std::vector<IterationRecord>& history, const std::filesystem::path& path) {
    auto out = open_output(path);
    out << "iteration,rho_minus,rho_plus,gamma\n";
    for (const auto& r : history) {
        out << r.n << ',' << format_real(r.rho_minus) << ',' << format_real(r.rho_plus) << ','
            << format_real(r.gamma) << '\n';
    }
    finish_output(out, path);
}

std::vector<IterationRecord> read_history_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw OutputError(path.string() + ": cannot open for reading");
    }
    std::string line;
    if (!std::getline(in, line) || line != "iteration,rho_minus,rho_plus,gamma") {
        throw std::invalid_argument(path.string() + ": missing history header");
    }
    std::vector<IterationRecord> history;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        const auto fields = split(line, ',');
        if (fields.size() != 4) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_number) + ": expected 4 fields");
        }
        IterationRecord r;
        std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), r.n);
        r.rho_minus = parse_real(fields[1]);
        r.rho_plus = parse_real(fields[2]);
        r.gamma = parse_real(fields[3]);
        history.push_back(r);
    }
    return history;
}

void emit_ball_csv(const PolarNorm& norm, const std::filesystem::path& path) {
    auto out = open_output(path);
    out << "phi,R,x,y\n";
    const auto ball = unit_ball(norm);
    for (std::size_t k = 0; k < norm.size(); ++k) {
        out << format_real(norm.node_angle(k)) << ',' << format_real(norm[k]) << ',' << format_real(ball[k][0])
            << ',' << format_real(ball[k][1]) << '\n';
    }
    finish_output(out, path);
}

std::vector<SvgCurve> ball_figure_curves(const PolarNorm& norm, const TransformTables& tables, double rho,
                                         bool show_images) {
    std::vector<SvgCurve> curves;
    curves.push_back({unit_ball(norm), true});
    if (!show_images) {
        return curves;
    }
    if (tables.node_count != norm.size()) {
        throw GridMismatch("figure tables and norm use different grids");
    }
    for (std::size_t i = 0; i < tables.matrix_count(); ++i) {
        SvgCurve curve;
        for (std::size_t k = 0; k < norm.size(); ++k) {
            const double gain = tables.gain[i][k];
            if (gain <= 0.0) {
                curve.closed = false;
                continue;
            }
            const double scale = rho / (gain * norm.eval_direction(tables.angle[i][k]));
            const Vec2 u = grid_direction(k, norm.size());
            curve.points.push_back({scale * u[0], scale * u[1]});
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

std::string ball_svg(const PolarNorm& norm, const TransformTables& tables, double rho, bool show_images) {
    const auto curves = ball_figure_curves(norm, tables, rho, show_images);
    double extent = 0.0;
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
        }
    }
    const double half = 1.1 * (extent > 0.0 ? extent : 1.0);
    const double stroke = half * 0.004;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"" << format_real(-half)
        << ' ' << format_real(-half) << ' ' << format_real(2 * half) << ' ' << format_real(2 * half) << "\">\n"
        << "  <rect x=\"" << format_real(-half) << "\" y=\"" << format_real(-half) << "\" width=\""
        << format_real(2 * half) << "\" height=\"" << format_real(2 * half) << "\" fill=\"white\"/>\n"
        << "  <g id=\"axes\" stroke=\"#888888\" stroke-width=\"" << format_real(stroke / 2) << "\">\n"
        << "    <line x1=\"" << format_real(-half) << "\" y1=\"0\" x2=\"" << format_real(half) << "\" y2=\"0\"/>\n"
        << "    <line x1=\"0\" y1=\"" << format_real(-half) << "\" x2=\"0\" y2=\"" << format_real(half) << "\"/>\n"
        << "  </g>\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const bool ball = c == 0;
        const char* colour = ball ? "#000000" : kPalette[(c - 1) % std::size(kPalette)];
        svg << "  <" << (curves[c].closed ? "polygon" : "polyline") << " id=\""
            << (ball ? std::string("unit-ball") : "image-" + std::to_string(c)) << "\" fill=\"none\" stroke=\""
            << colour << "\" stroke-width=\"" << format_real(ball ? 1.5 * stroke : stroke) << "\" points=\"";
        for (std::size_t k = 0; k < curves[c].points.size(); ++k) {
            const auto& p = curves[c].points[k];
            // flip y so that the picture has the mathematical orientation
            svg << (k ? " " : "") << format_real(p[0]) << ',' << format_real(-p[1]);
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_ball_svg(const PolarNorm& norm, const TransformTables& tables, double rho, const std::filesystem::path& path,
                   bool show_images) {
    const std::string text = ball_svg(norm, tables, rho, show_images);
    auto out = open_output(path);
    out << text;
    finish_output(out, path);
}

std::string summary_line(const RunResult& result) {
    return "rho_estimate=" + format_real(result.rho_estimate) + " rho_lower=" + format_real(result.rho_lower) +
           " rho_upper=" + format_real(result.rho_upper) + " iterations=" + std::to_string(result.iterations()) +
           " residual=" + format_real(result.residual) + " status=" + std::string(to_string(result.status));
}

std::string result_json(const RunResult& result) {
    nlohmann::json history = nlohmann::json::array();
    for (const auto& r : result.history) {
        history.push_back({{"iteration", r.n}, {"rho_minus", r.rho_minus}, {"rho_plus", r.rho_plus}, {"gamma", r.gamma}});
    }
    nlohmann::json doc = {
        {"rho_estimate", result.rho_estimate},
        {"rho_lower", result.rho_lower},
        {"rho_upper", result.rho_upper},
        {"iterations", result.iterations()},
        {"residual", result.residual},
        {"status", std::string(to_string(result.status))},
        {"nodes", result.norm.size()},
        {"history", history},
    };
    return doc.dump(2);
}

}  // namespace jsr
