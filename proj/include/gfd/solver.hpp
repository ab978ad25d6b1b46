#ifndef GFD_SOLVER_HPP
#define GFD_SOLVER_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfd/operators.hpp"

namespace gfd {

/// a D(y) + b y = c with a constant weight of value w > 0, order alpha in
/// (0,1], and initial condition y(t0) = y0 at t0 > 0.
struct LinearFracODE {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double alpha = 1.0;
    double weight_value = 1.0;
    double t0 = 1.0;
    double y0 = 0.0;

    void validate() const;
};

/// Closed-form solution as an expression in t.
///
/// b != 0:  y = c/b + c1 exp(-b t^alpha / (a w alpha)) with c1 fixed by the
/// initial condition. b == 0: direct quadrature
/// y = y0 + c/(a w) (t^alpha - t0^alpha)/alpha.
Expr solve_linear_closed(const LinearFracODE& ode);

/// Fixed-step classical fourth-order Runge-Kutta on the reduced equation
/// y' = (c - b y) t^(alpha-1) / (a w), from t0 to t_end. Returns the
/// (t, y) trajectory including both endpoints. The right-hand side is
/// singular at 0, so t0 must stay positive.
std::vector<std::pair<double, double>> solve_linear_numeric(const LinearFracODE& ode,
                                                            double t_end, double step);

/// Pointwise defect of a candidate solution over a grid.
struct ResidualReport {
    std::string label;
    std::vector<std::string> columns;          // ("t","value") or ("t","x","value")
    std::vector<std::vector<double>> rows;
    double max_abs_residual = 0.0;
    std::vector<std::string> notes;

    /// CSV with 17-significant-digit fields, then a one-line JSON summary.
    void write_csv(std::ostream& os, bool header = true) const;
    std::string summary_json() const;
};

/// residual(t) = a D(y)(t) + b y(t) - c on the grid, exact path.
ResidualReport ode_residual(const LinearFracODE& ode, const Expr& y, std::span<const double> grid);

/// A reduced-form PDE whose residual is built symbolically from a candidate
/// u(x, t). Two audited examples ship built in, each in the variants the
/// source text supports (see pde2 notes), plus fully custom forms.
class PdeForm {
  public:
    using Builder = std::function<Expr(const Expr& u)>;

    /// u_t + (2/3) x u_x + u - x^2.
    static PdeForm pde1();
    /// x^(14/15) t^(4/5) u_xt + 2 t^(1/3) u — the form the separated
    /// solution actually solves (consistent with the printed antiderivatives).
    static PdeForm pde2();
    /// x^(14/5) t^(4/5) u_xt + 2 t^(1/3) u — the reduced equation as printed.
    static PdeForm pde2_printed();
    /// x^(19/5) t^(4/5) u_xt + 2 t^(1/3) u — reduction of the original
    /// equation with the 1/x factor cleared consistently.
    static PdeForm pde2_full_reduction();
    static PdeForm custom(std::string label, Builder residual_of);

    const std::string& label() const { return label_; }
    Expr residual_expr(const Expr& u) const { return build_(u); }

  private:
    PdeForm(std::string label, Builder b) : label_(std::move(label)), build_(std::move(b)) {}
    std::string label_;
    Builder build_;
};

/// Candidate solutions for the two built-in equations, corrected so the
/// residual vanishes, and the variants printed in the source material.
Expr pde1_candidate_corrected();
Expr pde1_candidate_printed();
Expr pde2_candidate_corrected(double k = 1.0);

/// Evaluate the residual of u over points binding x and t (all > 0).
ResidualReport pde_residual(const PdeForm& equation, const Expr& u,
                            std::span<const Bindings> points);

/// Convenience: tensor grid helpers.
std::vector<double> linspace(double start, double stop, double step);
std::vector<Bindings> grid2d(std::span<const double> xs, std::span<const double> ts);

}  // namespace gfd

#endif
