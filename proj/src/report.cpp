#include "gfd/report.hpp"

#include <cmath>
#include <ostream>

#include "gfd/format.hpp"

namespace gfd {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Audit: return "AUDIT";
    }
    return "?";
}

void PropertyReport::add_row(double t, double lhs, double rhs) {
    add_row(property_id, t, lhs, rhs);
}

void PropertyReport::add_row(std::string id, double t, double lhs, double rhs) {
    rows.push_back({std::move(id), t, lhs, rhs, std::fabs(lhs - rhs)});
}

void PropertyReport::note(std::string text) { notes.push_back(std::move(text)); }

namespace {
void recompute_maxima(PropertyReport& r) {
    r.max_abs_residual = 0.0;
    r.max_rel_residual = 0.0;
    for (const auto& row : r.rows) {
        r.max_abs_residual = std::max(r.max_abs_residual, row.abs_residual);
        r.max_rel_residual = std::max(r.max_rel_residual, rel_residual(row.lhs, row.rhs));
    }
}
}  // namespace

void PropertyReport::finalize_pass_fail(double tol) {
    tolerance = tol;
    recompute_maxima(*this);
    if (rows.empty()) {
        verdict = Verdict::Fail;
        note("no usable grid points");
        return;
    }
    verdict = (max_rel_residual <= tol) ? Verdict::Pass : Verdict::Fail;
}

void PropertyReport::finalize_audit() {
    recompute_maxima(*this);
    verdict = Verdict::Audit;
}

void PropertyReport::write_csv(std::ostream& os, bool header) const {
    if (header) os << "property_id,t,lhs,rhs,abs_residual\n";
    for (const auto& row : rows) {
        os << row.property_id << ',' << format_shortest(row.t) << ','
           << format_shortest(row.lhs) << ',' << format_shortest(row.rhs) << ','
           << format_shortest(row.abs_residual) << '\n';
    }
}

std::string PropertyReport::summary_json() const {
    std::string s = "{\"property_id\":\"" + property_id + "\",\"verdict\":\"" +
                    to_string(verdict) + "\",\"max_abs_residual\":" +
                    format_shortest(max_abs_residual) + ",\"max_rel_residual\":" +
                    format_shortest(max_rel_residual);
    if (verdict != Verdict::Audit) s += ",\"tolerance\":" + format_shortest(tolerance);
    if (!inputs.empty()) s += ",\"inputs\":\"" + inputs + "\"";
    if (!notes.empty()) {
        s += ",\"notes\":[";
        for (std::size_t i = 0; i < notes.size(); ++i) {
            if (i) s += ',';
            s += '"' + notes[i] + '"';
        }
        s += ']';
    }
    s += '}';
    return s;
}

}  // namespace gfd
