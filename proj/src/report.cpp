#include "cxpoisson/report.hpp"

#include <iomanip>
#include <sstream>

namespace cxp {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::refused: return "refused";
    }
    return "?";
}

ojson Record::to_json() const {
    ojson o;
    o["check"] = check;
    o["subject"] = subject;
    o["inputs"] = inputs;
    o["verdict"] = verdict_name(verdict);
    if (verdict == Verdict::refused) o["reason"] = reason;
    o["witnesses"] = witnesses;
    if (timing_ms) o["timing_ms"] = *timing_ms;
    return o;
}

int Report::exit_code() const {
    bool fail = false;
    for (const auto& r : records) {
        if (r.verdict == Verdict::refused) return 2;
        fail = fail || r.verdict == Verdict::fail;
    }
    return fail ? 1 : 0;
}

std::string render_machine(const Report& r) {
    std::string out;
    for (const auto& rec : r.records) out += rec.to_json().dump() + "\n";
    return out;
}

namespace {

bool is_flat(const ojson& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& e : j)
        if (!is_flat(e) || (e.is_array() && !e.empty() && e[0].is_array())) return false;
    return true;
}

std::string scalar_text(const ojson& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string flat_text(const ojson& j) {
    if (!j.is_array()) return scalar_text(j);
    std::string s = "[";
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + flat_text(j[k]);
    return s + "]";
}

void emit(std::ostringstream& os, const std::string& label, const ojson& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (is_flat(j)) {
        os << pad << label << (label.empty() ? "" : ": ") << flat_text(j) << "\n";
        return;
    }
    if (!label.empty()) os << pad << label << ":\n";
    int inner = indent + (label.empty() ? 0 : 2);
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) emit(os, k, v, inner);
    } else {
        for (std::size_t k = 0; k < j.size(); ++k) {
            const ojson& e = j[k];
            if (e.is_object()) {
                // "- key: value" on the first line, remaining keys aligned under it.
                std::ostringstream sub;
                emit(sub, "", e, inner + 2);
                std::string text = sub.str();
                text[static_cast<std::size_t>(inner)] = '-';
                os << text;
            } else {
                emit(os, "-", e, inner);
            }
        }
    }
}

}  // namespace

std::string render_human(const Report& r) {
    std::ostringstream os;
    for (const auto& rec : r.records) {
        std::string v = verdict_name(rec.verdict);
        for (auto& c : v) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        os << "[" << v << "] " << rec.check << " " << rec.subject;
        if (rec.timing_ms) os << "  (" << std::fixed << std::setprecision(1) << *rec.timing_ms << " ms)";
        os << "\n";
        if (rec.verdict == Verdict::refused) os << "  reason: " << rec.reason << "\n";
        if (!rec.inputs.empty()) emit(os, "inputs", rec.inputs, 2);
        if (!rec.witnesses.empty()) emit(os, "witnesses", rec.witnesses, 2);
    }
    return os.str();
}

ojson to_json(const Point& p) {
    ojson a = ojson::array();
    for (const auto& q : p) a.push_back(rational_str(q));
    return a;
}

ojson to_json(const CMatrix& m) {
    ojson rows = ojson::array();
    for (Index r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

ojson to_json(const SubspaceReal& s) { return to_json(s.basis()); }
ojson to_json(const Lagrangian& l) { return to_json(l.basis()); }

}  // namespace cxp
