#include "gfd/solver.hpp"

#include <cmath>
#include <ostream>

#include "gfd/format.hpp"

namespace gfd {

void LinearFracODE::validate() const {
    if (a == 0.0) throw ParameterError("coefficient a must be nonzero");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0,1]");
    if (!(weight_value > 0.0)) throw ParameterError("weight value must be positive");
    if (!(t0 > 0.0)) throw ParameterError("t0 must be positive");
}

Expr solve_linear_closed(const LinearFracODE& ode) {
    ode.validate();
    const Expr t = Expr::variable("t");
    const double aw = ode.a * ode.weight_value;
    if (ode.b == 0.0) {
        // y' = c/(a w) t^(alpha-1)  =>  y = y0 + c/(a w alpha) (t^alpha - t0^alpha)
        const double k = ode.c / (aw * ode.alpha);
        return (Expr::constant(ode.y0) +
                Expr::constant(k) *
                    (Expr::pow(t, ode.alpha) - Expr::constant(std::pow(ode.t0, ode.alpha))))
            .simplify();
    }
    const double rate = -ode.b / (aw * ode.alpha);
    const double steady = ode.c / ode.b;
    const double c1 = (ode.y0 - steady) * std::exp(-rate * std::pow(ode.t0, ode.alpha));
    return (Expr::constant(steady) +
            Expr::constant(c1) * Expr::exp(Expr::constant(rate) * Expr::pow(t, ode.alpha)))
        .simplify();
}

std::vector<std::pair<double, double>> solve_linear_numeric(const LinearFracODE& ode,
                                                            double t_end, double step) {
    ode.validate();
    if (!(t_end > ode.t0)) throw StepError("t_end must exceed t0");
    if (!(step > 0.0) || step > (t_end - ode.t0) / 10.0)
        throw StepError("step must be positive and at most (t_end - t0)/10");

    const double inv_aw = 1.0 / (ode.a * ode.weight_value);
    const auto rhs = [&](double t, double y) {
        return (ode.c - ode.b * y) * std::pow(t, ode.alpha - 1.0) * inv_aw;
    };

    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>((t_end - ode.t0) / step) + 2);
    double t = ode.t0;
    double y = ode.y0;
    out.emplace_back(t, y);
    while (t < t_end) {
        const double h = std::min(step, t_end - t);
        const double k1 = rhs(t, y);
        const double k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
        const double k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
        const double k4 = rhs(t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        if (std::fabs(y) > 1e12)
            throw BlowupError("trajectory exceeded 1e12 at t = " + format_shortest(t));
        out.emplace_back(t, y);
    }
    return out;
}

void ResidualReport::write_csv(std::ostream& os, bool header) const {
    if (header) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) os << ',';
            os << columns[i];
        }
        os << '\n';
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_sig17(row[i]);
        }
        os << '\n';
    }
}

std::string ResidualReport::summary_json() const {
    std::string s = "{\"label\":\"" + label + "\",\"max_abs_residual\":" +
                    format_shortest(max_abs_residual);
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

ResidualReport ode_residual(const LinearFracODE& ode, const Expr& y, std::span<const double> grid) {
    ode.validate();
    ResidualReport report;
    report.label = "linear_ode";
    report.columns = {"t", "value"};
    const Expr dy = y.differentiate("t");
    for (double t : grid) {
        if (!(t > 0.0)) throw GridError("ode residual grid requires t > 0");
        try {
            Bindings b{{"t", t}};
            const double d =
                ode.weight_value * std::pow(t, 1.0 - ode.alpha) * dy.evaluate(b);
            const double r = ode.a * d + ode.b * y.evaluate(b) - ode.c;
            if (!std::isfinite(r)) {
                report.notes.push_back("t=" + format_shortest(t) +
                                       ": non-finite residual (excluded)");
                continue;
            }
            report.rows.push_back({t, r});
            report.max_abs_residual = std::max(report.max_abs_residual, std::fabs(r));
        } catch (const DomainError& e) {
            report.notes.push_back("t=" + format_shortest(t) + ": " + e.what() + " (excluded)");
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// PDE residual forms

namespace {

Expr xvar() { return Expr::variable("x"); }
Expr tvar() { return Expr::variable("t"); }

Expr pde2_residual_with_x_power(const Expr& u, double x_exponent) {
    const Expr u_xt = u.differentiate("x").differentiate("t");
    return (Expr::pow(xvar(), x_exponent) * Expr::pow(tvar(), 4.0 / 5.0) * u_xt +
            Expr::constant(2.0) * Expr::pow(tvar(), 1.0 / 3.0) * u)
        .simplify();
}

}  // namespace

PdeForm PdeForm::pde1() {
    return PdeForm("pde1", [](const Expr& u) {
        return (u.differentiate("t") +
                Expr::constant(2.0 / 3.0) * xvar() * u.differentiate("x") + u -
                Expr::pow(xvar(), 2.0))
            .simplify();
    });
}

PdeForm PdeForm::pde2() {
    return PdeForm("pde2",
                   [](const Expr& u) { return pde2_residual_with_x_power(u, 14.0 / 15.0); });
}

PdeForm PdeForm::pde2_printed() {
    return PdeForm("pde2_printed",
                   [](const Expr& u) { return pde2_residual_with_x_power(u, 14.0 / 5.0); });
}

PdeForm PdeForm::pde2_full_reduction() {
    return PdeForm("pde2_full_reduction",
                   [](const Expr& u) { return pde2_residual_with_x_power(u, 19.0 / 5.0); });
}

PdeForm PdeForm::custom(std::string label, Builder residual_of) {
    return PdeForm(std::move(label), std::move(residual_of));
}

Expr pde1_candidate_corrected() { return parse("(3/7)*x^2*(1-exp(-7*t/3))"); }
Expr pde1_candidate_printed() { return parse("(x^2/7)*(1-exp(-7/3))"); }

Expr pde2_candidate_corrected(double k) {
    if (k == 0.0) throw ParameterError("separation constant k must be nonzero");
    const Expr fx = Expr::exp(Expr::constant(15.0 * k) * Expr::pow(xvar(), 1.0 / 15.0));
    const Expr gt =
        Expr::exp(Expr::constant(-15.0 / (4.0 * k)) * Expr::pow(tvar(), 8.0 / 15.0));
    return fx * gt;
}

ResidualReport pde_residual(const PdeForm& equation, const Expr& u,
                            std::span<const Bindings> points) {
    ResidualReport report;
    report.label = equation.label();
    report.columns = {"t", "x", "value"};
    const Expr residual = equation.residual_expr(u);
    for (const auto& p : points) {
        try {
            for (const auto& [name, value] : p)
                if (!(value > 0.0))
                    throw DomainError("grid coordinate " + name + " must be positive");
            const double r = residual.evaluate(p);
            const double t = p.count("t") ? p.at("t") : 0.0;
            const double x = p.count("x") ? p.at("x") : 0.0;
            if (!std::isfinite(r)) {
                report.notes.push_back("t=" + format_shortest(t) + " x=" + format_shortest(x) +
                                       ": non-finite residual (excluded)");
                continue;
            }
            report.rows.push_back({t, x, r});
            report.max_abs_residual = std::max(report.max_abs_residual, std::fabs(r));
        } catch (const DomainError& e) {
            report.notes.push_back(std::string(e.what()) + " (excluded)");
        }
    }
    return report;
}

std::vector<double> linspace(double start, double stop, double step) {
    if (!(step > 0.0)) throw GridError("grid step must be positive");
    if (stop < start) throw GridError("grid stop precedes start");
    std::vector<double> out;
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9));
    out.reserve(count + 1);
    for (int i = 0; i <= count; ++i) out.push_back(start + i * step);
    return out;
}

std::vector<Bindings> grid2d(std::span<const double> xs, std::span<const double> ts) {
    std::vector<Bindings> out;
    out.reserve(xs.size() * ts.size());
    for (double t : ts)
        for (double x : xs) out.push_back(Bindings{{"t", t}, {"x", x}});
    return out;
}

}  // namespace gfd
