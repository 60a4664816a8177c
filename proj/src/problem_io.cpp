#include "jsr/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace jsr {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void fail(std::string_view source, const std::string& field, const std::string& message) {
    throw ProblemError(std::string(source) + ": " + field + ": " + message);
}

double read_entry(const json& value, std::string_view source, const std::string& field) {
    if (!value.is_number()) {
        fail(source, field, "expected a number, got " + std::string(value.type_name()));
    }
    return value.get<double>();
}

Mat2 read_matrix(const json& value, std::string_view source, std::size_t index) {
    const std::string field = "matrices[" + std::to_string(index) + "]";
    if (!value.is_array()) {
        fail(source, field, "expected a 2x2 array");
    }
    if (value.size() != 2) {
        fail(source, field, "shape error: expected 2 rows, got " + std::to_string(value.size()));
    }
    double entries[2][2];
    for (std::size_t row = 0; row < 2; ++row) {
        const json& r = value[row];
        const std::string row_field = field + "[" + std::to_string(row) + "]";
        if (!r.is_array() || r.size() != 2) {
            fail(source, row_field,
                 "shape error: expected 2 columns, got " + (r.is_array() ? std::to_string(r.size()) : "a scalar"));
        }
        for (std::size_t col = 0; col < 2; ++col) {
            entries[row][col] = read_entry(r[col], source, row_field + "[" + std::to_string(col) + "]");
        }
    }
    return {entries[0][0], entries[0][1], entries[1][0], entries[1][1]};
}

std::size_t read_count(const json& value, std::string_view source, const std::string& field) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        fail(source, field, "expected a nonnegative integer");
    }
    return value.get<std::size_t>();
}

}  // namespace

Problem parse_problem_text(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ProblemError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": parse error: " + e.what());
    }
    if (!doc.is_object()) {
        fail(source, "<root>", "expected an object");
    }

    static const std::vector<std::string> known = {"matrices",       "nodes",     "tolerance",
                                                   "max_iterations", "averaging", "allow_reducible"};
    for (const auto& [key, value] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            fail(source, key, "unknown field");
        }
    }

    const auto matrices_it = doc.find("matrices");
    if (matrices_it == doc.end()) {
        fail(source, "matrices", "missing required field");
    }
    if (!matrices_it->is_array() || matrices_it->empty()) {
        fail(source, "matrices", "expected a nonempty array of 2x2 matrices");
    }
    std::vector<Mat2> matrices;
    for (std::size_t i = 0; i < matrices_it->size(); ++i) {
        matrices.push_back(read_matrix((*matrices_it)[i], source, i));
    }

    RunConfig config;
    if (doc.contains("nodes")) {
        config.node_count = read_count(doc["nodes"], source, "nodes");
    }
    if (doc.contains("tolerance")) {
        config.tol_abs = read_entry(doc["tolerance"], source, "tolerance");
    }
    if (doc.contains("max_iterations")) {
        config.max_iterations = read_count(doc["max_iterations"], source, "max_iterations");
    }
    if (doc.contains("averaging")) {
        const json& value = doc["averaging"];
        if (!value.is_string()) {
            fail(source, "averaging", "expected a string");
        }
        try {
            config.averaging = parse_averaging(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(source, "averaging", e.what());
        }
    }
    if (doc.contains("allow_reducible")) {
        const json& value = doc["allow_reducible"];
        if (!value.is_boolean()) {
            fail(source, "allow_reducible", "expected true or false");
        }
        config.allow_reducible = value.get<bool>();
    }

    try {
        config.validate();
        return Problem{MatrixSet(std::move(matrices)), config};
    } catch (const std::invalid_argument& e) {
        fail(source, "<problem>", e.what());
    }
}

Problem parse_problem(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ProblemError(path.string() + ": cannot open problem file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str(), path.string());
}

std::string write_problem_text(const Problem& problem) {
    json matrices = json::array();
    for (const Mat2& m : problem.matrices) {
        matrices.push_back({{m.a11, m.a12}, {m.a21, m.a22}});
    }
    const RunConfig& cfg = problem.config;
    json doc = {
        {"matrices", matrices},
        {"nodes", cfg.node_count},
        {"tolerance", cfg.tol_abs},
        {"max_iterations", cfg.max_iterations},
        {"averaging", std::string(to_string(cfg.averaging))},
        {"allow_reducible", cfg.allow_reducible},
    };
    return doc.dump(2) + "\n";
}

}  // namespace jsr
