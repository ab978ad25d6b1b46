#include "gfd/operators.hpp"

#include <cmath>

#include "gfd/format.hpp"

namespace gfd {

std::string OperatorKind::name() const {
    switch (tag_) {
        case Tag::Gfd: return "gfd(" + weight_.describe() + ")";
        case Tag::Khalil: return "khalil";
        case Tag::AndersonUlness: return "anderson-ulness";
        case Tag::Katugampola: return "katugampola";
        case Tag::GuebbaiGhiat: return "guebbai-ghiat";
        case Tag::Camrud: return "camrud";
        case Tag::CaputoL1: return "caputo";
    }
    return "?";
}

namespace {

double eval_at(const Expr& f, double t) {
    Bindings b{{"t", t}};
    return f.evaluate(b);
}

// Symmetric quotient (f(t + s eps) - f(t - s eps)) / (2 eps) for a shifted
// limit. When the shift factor exceeds 1 the quotient parameter is reduced
// to eps = h / |s|, capping the argument displacement at h; the ratio-form
// operators scale the shift by f^((1-a)/a), which would otherwise push the
// argument out of range.
double shifted_quotient(const Expr& f, double t, double shift, double h) {
    const double mag = std::fabs(shift);
    const double eps = mag > 1.0 ? h / mag : h;
    const double step = shift * eps;
    double fp, fm;
    try {
        fp = eval_at(f, t + step);
        fm = eval_at(f, t - step);
    } catch (const DomainError& e) {
        throw StepError(std::string("difference step leaves the domain: ") + e.what());
    }
    return (fp - fm) / (2.0 * eps);
}

void require_positive_t(double t) {
    if (!(t > 0.0)) throw DomainError("fractional evaluation requires t > 0");
}

void check_guebbai_preconditions(const Expr& f, double t, double& ft, double& dft) {
    ft = eval_at(f, t);
    dft = eval_at(f.differentiate("t"), t);
    if (!(ft > 0.0))
        throw PositivityError("operator requires f(t) > 0, got f(" + format_shortest(t) +
                              ") = " + format_shortest(ft));
    if (dft < 0.0)
        throw PositivityError("operator requires f'(t) >= 0, got f'(" + format_shortest(t) +
                              ") = " + format_shortest(dft));
}

}  // namespace

double gfd_derivative(const Expr& f, Alpha alpha, const WeightSpec& w, double t,
                      const EvalMethod& method) {
    require_positive_t(t);
    if (!alpha.in_unit_interval())
        throw AlphaError("gfd_derivative expects alpha in (0,1]; use gfd_higher above 1");
    const double a = alpha.value();
    const double wv = w(t, a);
    const double m = wv * std::pow(t, 1.0 - a);
    if (method.is_limit()) return shifted_quotient(f, t, m, method.h());
    return m * eval_at(f.differentiate("t"), t);
}

double named_derivative(const OperatorKind& kind, const Expr& f, Alpha alpha, double t,
                        const EvalMethod& method, int caputo_steps) {
    const double a = alpha.value();
    switch (kind.tag()) {
        case OperatorKind::Tag::Gfd:
            return gfd_derivative(f, alpha, kind.weight(), t, method);

        case OperatorKind::Tag::Khalil: {
            require_positive_t(t);
            if (method.is_limit())
                return shifted_quotient(f, t, std::pow(t, 1.0 - a), method.h());
            return std::pow(t, 1.0 - a) * eval_at(f.differentiate("t"), t);
        }

        case OperatorKind::Tag::Katugampola: {
            require_positive_t(t);
            if (method.is_limit()) {
                // (f(t e^{h t^-a}) - f(t e^{-h t^-a})) / (2h)
                const double h = method.h();
                const double s = std::exp(method.h() * std::pow(t, -a));
                double fp, fm;
                try {
                    fp = eval_at(f, t * s);
                    fm = eval_at(f, t / s);
                } catch (const DomainError& e) {
                    throw StepError(std::string("difference step leaves the domain: ") + e.what());
                }
                return (fp - fm) / (2.0 * h);
            }
            return std::pow(t, 1.0 - a) * eval_at(f.differentiate("t"), t);
        }

        case OperatorKind::Tag::AndersonUlness: {
            // (1-a)|t|^a f(t) + a |t|^(1-a) f'(t); no limit of its own, so the
            // quotient path only replaces f' by a central difference.
            const double ta = std::pow(std::fabs(t), a);
            const double t1a = std::pow(std::fabs(t), 1.0 - a);
            const double ft = eval_at(f, t);
            double dft;
            if (method.is_limit())
                dft = shifted_quotient(f, t, 1.0, method.h());
            else
                dft = eval_at(f.differentiate("t"), t);
            return (1.0 - a) * ta * ft + a * t1a * dft;
        }

        case OperatorKind::Tag::GuebbaiGhiat: {
            double ft, dft;
            check_guebbai_preconditions(f, t, ft, dft);
            if (method.is_limit()) {
                const double shift = std::pow(ft, (1.0 - a) / a);
                const double q = shifted_quotient(f, t, shift, method.h());
                if (q < 0.0)
                    throw PositivityError("difference quotient is negative; cannot take power");
                return std::pow(q, a);
            }
            return std::pow(dft, a) * std::pow(ft, 1.0 - a);
        }

        case OperatorKind::Tag::Camrud: {
            double ft, dft;
            check_guebbai_preconditions(f, t, ft, dft);
            if (method.is_limit()) {
                const double q = shifted_quotient(f, t, 1.0, method.h());
                if (q < 0.0)
                    throw PositivityError("difference quotient is negative; cannot take power");
                return std::pow(ft, 1.0 - a) * std::pow(q, a);
            }
            return std::pow(ft, 1.0 - a) * std::pow(dft, a);
        }

        case OperatorKind::Tag::CaputoL1:
            return caputo(f, alpha, kind.caputo_lower(), t, caputo_steps);
    }
    throw Error("corrupt operator kind");
}

double caputo(const Expr& f, Alpha alpha, double a, double t, int n_steps) {
    const double al = alpha.value();
    if (!(al < 1.0)) throw AlphaError("integral-form derivative requires alpha in (0,1)");
    if (n_steps < 2) throw GridError("n_steps must be at least 2");
    if (!(t > a)) throw GridError("upper limit t must exceed the lower limit a");

    const Expr df = f.differentiate("t");
    const double h = (t - a) / n_steps;
    const double one_minus = 1.0 - al;
    // Sum f'(m_i) * [(t-x_i)^(1-a) - (t-x_{i+1})^(1-a)] / ((1-a) Gamma(1-a)).
    double acc = 0.0;
    double left_pow = std::pow(t - a, one_minus);
    for (int i = 0; i < n_steps; ++i) {
        const double x_next = (i + 1 == n_steps) ? t : a + (i + 1) * h;
        const double right_pow = (i + 1 == n_steps) ? 0.0 : std::pow(t - x_next, one_minus);
        const double mid = a + (i + 0.5) * h;
        acc += eval_at(df, mid) * (left_pow - right_pow);
        left_pow = right_pow;
    }
    return acc / (one_minus * std::tgamma(one_minus));
}

double weight_of(const OperatorKind& kind, const Expr& f, Alpha alpha, double t) {
    require_positive_t(t);
    if (kind.tag() == OperatorKind::Tag::CaputoL1)
        throw DomainError("the integral-form operator has no pointwise representing weight");
    const double dft = eval_at(f.differentiate("t"), t);
    if (dft == 0.0) throw SingularError("representing weight undefined where f'(t) = 0");
    const double value = named_derivative(kind, f, alpha, t, ExactReduction{});
    return value / (std::pow(t, 1.0 - alpha.value()) * dft);
}

double gfd_higher(const Expr& f, Alpha alpha, const WeightSpec& w, double t) {
    require_positive_t(t);
    const int n = alpha.ceil_order();
    Expr d = f;
    for (int i = 0; i < n; ++i) d = d.differentiate("t").simplify();
    const double a = alpha.value();
    return w(t, a) * std::pow(t, n - a) * eval_at(d, t);
}

PropertyReport validate_weight(const WeightSpec& w,
                               std::span<const std::pair<double, double>> t_alpha_samples) {
    if (t_alpha_samples.empty()) throw GridError("validation grid is empty");
    PropertyReport report;
    report.property_id = "weight_iff";
    report.inputs = "w=" + w.describe();
    bool ok = true;
    for (const auto& [t, a] : t_alpha_samples) {
        if (!(t > 0.0)) throw GridError("validation grid requires t > 0");
        if (!(a > 0.0 && a <= 1.0)) throw GridError("validation grid requires alpha in (0,1]");
        const double wv = w(t, a);
        report.add_row(t, wv, 1.0);
        if (a == 1.0) {
            if (std::fabs(wv - 1.0) > 1e-12) {
                ok = false;
                report.note("w(t=" + format_shortest(t) + ", alpha=1) = " + format_shortest(wv) +
                            " != 1");
            }
        } else if (std::fabs(wv - 1.0) <= 1e-12) {
            ok = false;
            report.note("w(t=" + format_shortest(t) + ", alpha=" + format_shortest(a) +
                        ") = 1 with alpha < 1");
        }
    }
    report.finalize_audit();
    report.verdict = ok ? Verdict::Pass : Verdict::Fail;
    report.tolerance = 1e-12;
    return report;
}

}  // namespace gfd
