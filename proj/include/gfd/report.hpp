#ifndef GFD_REPORT_HPP
#define GFD_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gfd {

enum class Verdict {
    Pass,   // residuals within the property's tolerance
    Fail,   // an expected identity did not hold
    Audit,  // residuals recorded with no pass expectation
};

std::string to_string(Verdict v);

/// One audited claim evaluated over a grid: the values of both sides at
/// each point, the worst residuals, and a verdict. AUDIT reports record
/// residuals for claims that are not expected to be identities.
struct PropertyReport {
    struct Row {
        std::string property_id;  // per-row id (sub-checks share one report)
        double t = 0.0;
        double lhs = 0.0;
        double rhs = 0.0;
        double abs_residual = 0.0;
    };

    std::string property_id;
    std::string inputs;  // human-readable description of f, g, alpha, w, grid
    std::vector<Row> rows;
    std::vector<std::string> notes;  // excluded points, structural remarks
    double tolerance = 0.0;          // relative tolerance used for PASS
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    Verdict verdict = Verdict::Audit;

    void add_row(double t, double lhs, double rhs);
    void add_row(std::string id, double t, double lhs, double rhs);
    void note(std::string text);

    /// Recompute residual maxima and set PASS/FAIL against `tol` (relative,
    /// scaled by 1 + magnitude). Reports with no usable rows FAIL.
    void finalize_pass_fail(double tol);

    /// Recompute residual maxima and mark the report AUDIT.
    void finalize_audit();

    /// Rows as CSV: property_id,t,lhs,rhs,abs_residual.
    void write_csv(std::ostream& os, bool header = true) const;

    /// One-line JSON summary with verdict and residual maxima.
    std::string summary_json() const;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Location found for an intermediate-value style theorem: the point c,
/// the target the operator value should attain there, and what it reached.
struct WitnessResult {
    double c = 0.0;
    double target_value = 0.0;
    double achieved_value = 0.0;
    int iterations = 0;
};

}  // namespace gfd

#endif
