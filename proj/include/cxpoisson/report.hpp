#ifndef CXPOISSON_REPORT_HPP
#define CXPOISSON_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cxpoisson/dirac.hpp"
#include "cxpoisson/multivector.hpp"

namespace cxp {

using ojson = nlohmann::ordered_json;

enum class Verdict { pass, fail, refused };
std::string verdict_name(Verdict v);

struct Record {
    std::string check;
    std::string subject;
    ojson inputs = ojson::object();
    Verdict verdict = Verdict::pass;
    std::string reason;  ///< set for refused records
    ojson witnesses = ojson::object();
    std::optional<double> timing_ms;

    /// Record in the fixed field order of the machine format.
    ojson to_json() const;
};

struct Report {
    std::vector<Record> records;
    /// 0 when every record passes, 2 when any is refused, 1 otherwise.
    int exit_code() const;
};

/// One JSON object per line.
std::string render_machine(const Report& r);
/// Indented text derived from the same records.
std::string render_human(const Report& r);

ojson to_json(const Point& p);
ojson to_json(const CMatrix& m);  ///< rows of entry strings
ojson to_json(const SubspaceReal& s);
ojson to_json(const Lagrangian& l);

}  // namespace cxp

#endif
