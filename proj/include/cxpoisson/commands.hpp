#ifndef CXPOISSON_COMMANDS_HPP
#define CXPOISSON_COMMANDS_HPP

#include <string>
#include <vector>

#include "cxpoisson/problem.hpp"
#include "cxpoisson/report.hpp"

namespace cxp {

struct RunOptions {
    std::vector<Point> extra_points;  ///< appended to the file points
    int grid_size = 20;
    std::vector<std::string> checks;  ///< empty: the file's checks for this command, else the defaults
    bool timing = false;
};

/// Check ids a command runs; throws std::invalid_argument on an id the command does not know.
std::vector<std::string> requested_checks(const std::string& command, const ProblemFile& pf, const RunOptions& opts);

Report cmd_check(const ProblemFile& pf, const RunOptions& opts);
Report cmd_invariants(const ProblemFile& pf, const RunOptions& opts);
Report cmd_dirac(const ProblemFile& pf, const RunOptions& opts);
Report cmd_normal_form(const ProblemFile& pf, const RunOptions& opts);
/// Dispatch by name: "check", "invariants", "dirac", "normal-form".
Report run_command(const std::string& command, const ProblemFile& pf, const RunOptions& opts);

}  // namespace cxp

#endif
