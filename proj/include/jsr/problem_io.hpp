#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jsr/matrix.hpp"
#include "jsr/mr_engine.hpp"

namespace jsr {

/// Input error in a problem file.  `what()` names the location (line/column
/// for syntax errors, the JSON field path for schema errors).
class ProblemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Problem {
    MatrixSet matrices;
    RunConfig config;
};

/// Problem file schema (JSON):
///
///     {
///       "matrices": [[[a11, a12], [a21, a22]], ...],   // required, nonempty
///       "nodes": 3000,                                 // optional
///       "tolerance": 1e-3,                             // optional
///       "max_iterations": 1000,                        // optional
///       "averaging": "arithmetic",                     // optional: arithmetic|geometric|harmonic
///       "allow_reducible": false                       // optional
///     }
Problem parse_problem(const std::filesystem::path& path);
Problem parse_problem_text(std::string_view text, std::string_view source = "<input>");

/// Canonical problem document; parse_problem_text(write_problem_text(p)) reproduces p.
std::string write_problem_text(const Problem& problem);

}  // namespace jsr
