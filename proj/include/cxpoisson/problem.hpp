#ifndef CXPOISSON_PROBLEM_HPP
#define CXPOISSON_PROBLEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cxpoisson/multivector.hpp"

namespace cxp {

/// Syntax or semantic error in a problem file, located by line/column (1-based) and JSON pointer.
struct ProblemError : std::runtime_error {
    ProblemError(const std::string& msg, std::string pointer, std::size_t line, std::size_t column);
    std::string pointer;
    std::size_t line = 0, column = 0;
};

template <typename T>
using Named = std::vector<std::pair<std::string, T>>;

/// One pipeline operation with its string arguments in file order.
struct PipelineStep {
    std::string op;
    std::vector<std::pair<std::string, std::string>> args;
    const std::string* arg(const std::string& key) const;
    friend bool operator==(const PipelineStep&, const PipelineStep&) = default;
};

struct Pipeline {
    std::string name;
    std::vector<Point> points;  ///< empty: use the problem points
    std::vector<PipelineStep> steps;
    friend bool operator==(const Pipeline&, const Pipeline&) = default;
};

/// ε = X + ξ₁ + iξ₂ by names of a vector field and two one-forms.
struct SectionSpec {
    std::string bivector;  ///< empty: the first bivector
    std::string x, xi1, xi2;
    friend bool operator==(const SectionSpec&, const SectionSpec&) = default;
};

struct ProblemFile {
    Chart chart;
    std::vector<std::string> zero;  ///< zeroed variables, the trailing chart coordinates
    Named<MultiField> bivectors;
    Named<FormField> forms;
    Named<MultiField> vectors;
    std::vector<Point> points;
    std::optional<SectionSpec> section;
    std::vector<std::string> moser;  ///< form names to average
    std::vector<Pipeline> pipelines;
    std::vector<std::string> checks;

    const MultiField& bivector(const std::string& name) const;
    const FormField& form(const std::string& name) const;
    const MultiField& vector(const std::string& name) const;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Check ids of one command ("check", "invariants", "dirac", "normal-form"), in run order.
const std::vector<std::string>& check_ids_for(const std::string& command);
/// Union over all commands.
const std::vector<std::string>& known_check_ids();

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
/// Canonical JSON text; parse_problem(print_problem(p)) == p.
std::string print_problem(const ProblemFile& p);

/// "1,2,3;1/2,0,-1" as points of the given dimension; throws std::invalid_argument.
std::vector<Point> parse_point_list(const std::string& text, int dim);

}  // namespace cxp

#endif
