#include "gfd/ring.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "gfd/format.hpp"

namespace gfd {

namespace {

constexpr double kRingTolerance = 1e-9;
constexpr double kIdentityTolerance = 1e-10;
constexpr double kWitnessTolerance = 1e-9;
constexpr int kScanPoints = 10000;

double eval_at(const Expr& e, double t) {
    Bindings b{{"t", t}};
    return e.evaluate(b);
}

// D^alpha as a reusable evaluator: m(t) * f'(t) with m = w * t^(1-alpha).
struct ExactOperator {
    Expr df;
    const WeightSpec& w;
    double alpha;

    ExactOperator(const Expr& f, Alpha a, const WeightSpec& weight)
        : df(f.differentiate("t")), w(weight), alpha(a.value()) {}

    double operator()(double t) const {
        return w(t, alpha) * std::pow(t, 1.0 - alpha) * eval_at(df, t);
    }
};

std::string describe_grid(std::span<const double> grid) {
    if (grid.empty()) return " grid=[]";
    return " grid=[" + format_shortest(grid.front()) + "," + format_shortest(grid.back()) +
           "](" + std::to_string(grid.size()) + ")";
}

std::string describe_pair(const Expr& f, const Expr& g, Alpha alpha, const WeightSpec& w,
                          std::span<const double> grid) {
    return "f=" + f.to_string() + " g=" + g.to_string() +
           " alpha=" + format_shortest(alpha.value()) + " w=" + w.describe() +
           describe_grid(grid);
}

void exclude_note(PropertyReport& r, double t, const char* why) {
    r.note("t=" + format_shortest(t) + ": " + why + " (excluded)");
}

}  // namespace

PropertyReport check_linearity(const Expr& f, const Expr& g, double a, double b, Alpha alpha,
                               const WeightSpec& w, std::span<const double> grid) {
    PropertyReport report;
    report.property_id = "linearity";
    report.inputs = describe_pair(f, g, alpha, w, grid) + " a=" + format_shortest(a) +
                    " b=" + format_shortest(b);
    const Expr combo = Expr::constant(a) * f + Expr::constant(b) * g;
    const ExactOperator d_combo(combo, alpha, w), d_f(f, alpha, w), d_g(g, alpha, w);
    for (double t : grid) {
        try {
            report.add_row(t, d_combo(t), a * d_f(t) + b * d_g(t));
        } catch (const DomainError& e) {
            exclude_note(report, t, e.what());
        }
    }
    report.finalize_pass_fail(kRingTolerance);
    return report;
}

PropertyReport check_leibniz(const Expr& f, const Expr& g, Alpha alpha, const WeightSpec& w,
                             std::span<const double> grid) {
    PropertyReport report;
    report.property_id = "leibniz";
    report.inputs = describe_pair(f, g, alpha, w, grid);
    const ExactOperator d_fg(f * g, alpha, w), d_f(f, alpha, w), d_g(g, alpha, w);
    for (double t : grid) {
        try {
            const double lhs = d_fg(t);
            const double rhs = eval_at(f, t) * d_g(t) + eval_at(g, t) * d_f(t);
            report.add_row(t, lhs, rhs);
        } catch (const DomainError& e) {
            exclude_note(report, t, e.what());
        }
    }
    report.finalize_pass_fail(kRingTolerance);
    return report;
}

PropertyReport check_quotient(const Expr& f, const Expr& g, Alpha alpha, const WeightSpec& w,
                              std::span<const double> grid) {
    PropertyReport report;
    report.property_id = "quotient";
    report.inputs = describe_pair(f, g, alpha, w, grid);
    const ExactOperator d_quot(f / g, alpha, w), d_f(f, alpha, w), d_g(g, alpha, w);
    for (double t : grid) {
        try {
            const double gv = eval_at(g, t);
            if (std::fabs(gv) < 1e-12) {
                exclude_note(report, t, "|g(t)| < 1e-12");
                continue;
            }
            const double lhs = d_quot(t);
            const double rhs = (gv * d_f(t) - eval_at(f, t) * d_g(t)) / (gv * gv);
            report.add_row(t, lhs, rhs);
        } catch (const DomainError& e) {
            exclude_note(report, t, e.what());
        }
    }
    report.finalize_pass_fail(kRingTolerance);
    return report;
}

PropertyReport check_chain(const Expr& f, const Expr& g, Alpha alpha, const WeightSpec& w,
                           std::span<const double> grid, ChainReading reading) {
    PropertyReport report;
    report.property_id =
        (reading == ChainReading::CompositeInT) ? "chain_composite_in_t" : "chain_outer_at_inner";
    report.inputs = describe_pair(f, g, alpha, w, grid);
    const double a = alpha.value();
    const Expr composite = f.substitute("x", g);
    const ExactOperator d_comp(composite, alpha, w), d_g(g, alpha, w);
    const Expr df_outer = f.differentiate("x");
    for (double t : grid) {
        try {
            const double lhs = d_comp(t);
            double middle;
            if (reading == ChainReading::CompositeInT) {
                middle = lhs;
            } else {
                const double u = eval_at(g, t);
                if (!(u > 0.0)) {
                    exclude_note(report, t, "g(t) <= 0 for the outer-at-inner reading");
                    continue;
                }
                Bindings at_u{{"x", u}};
                middle = w(u, a) * std::pow(u, 1.0 - a) * df_outer.evaluate(at_u);
            }
            const double rhs = std::pow(t, a - 1.0) / w(t, a) * middle * d_g(t);
            report.add_row(t, lhs, rhs);
        } catch (const DomainError& e) {
            exclude_note(report, t, e.what());
        }
    }
    report.finalize_audit();
    return report;
}

PropertyReport check_composition_law(const Expr& f, Alpha alpha, Alpha beta, const WeightSpec& w,
                                     std::span<const double> grid) {
    PropertyReport report;
    report.property_id = "composition_law";
    report.inputs = "f=" + f.to_string() + " alpha=" + format_shortest(alpha.value()) +
                    " beta=" + format_shortest(beta.value()) + " w=" + w.describe() +
                    describe_grid(grid);
    const double a = alpha.value();
    const double b = beta.value();
    const double s = a + b;
    // D^beta f as an expression in t, so the outer operator can act on it.
    const Expr inner =
        (w.as_expr(b) * Expr::pow(Expr::variable("t"), 1.0 - b) * f.differentiate("t"))
            .simplify();
    const ExactOperator d_inner(inner, alpha, w);
    const Alpha order_sum(s);
    for (double t : grid) {
        try {
            const double lhs = s <= 1.0
                                   ? gfd_derivative(f, order_sum, w, t, ExactReduction{})
                                   : gfd_higher(f, order_sum, w, t);
            const double factor = w(t, a) * w(t, b) * t / w(t, s);
            report.add_row("composition_law", t, lhs, factor * d_inner(t));
            // The hypothesis under which the law is claimed to collapse
            // to plain composition D^(a+b) = D^a D^b.
            report.add_row("composition_weight_condition", t, w(t, s) / (w(t, a) * w(t, b)), t);
        } catch (const DomainError& e) {
            exclude_note(report, t, e.what());
        }
    }
    report.note(
        "structural: rhs involves the second derivative of f, lhs only the first; "
        "no weight condition can make them agree for all f");
    report.finalize_audit();
    return report;
}

PropertyReport check_identities(Alpha alpha, const WeightSpec& w, std::span<const double> grid) {
    if (w.depends_on_t())
        throw WeightClassError(
            "closed-form identities require a weight constant in t; got w = " + w.describe());
    const double a = alpha.value();
    const double wv = w(1.0, a);
    PropertyReport report;
    report.property_id = "identities";
    report.inputs = "alpha=" + format_shortest(a) + " w=" + w.describe() + describe_grid(grid);

    const Expr t_var = Expr::variable("t");
    const Expr inner = Expr::constant(1.0 / (a * wv)) * Expr::pow(t_var, a);
    struct Item {
        const char* id;
        Expr target;
        std::function<double(double)> expected;  // of u = inner(t)
    };
    const Item items[] = {
        {"identity_power", inner, [](double) { return 1.0; }},
        {"identity_sin", Expr::sin(inner), [](double u) { return std::cos(u); }},
        {"identity_cos", Expr::cos(inner), [](double u) { return -std::sin(u); }},
        {"identity_exp", Expr::exp(inner), [](double u) { return std::exp(u); }},
    };
    for (const auto& item : items) {
        const ExactOperator d(item.target, alpha, w);
        for (double t : grid) {
            try {
                const double u = eval_at(inner, t);
                report.add_row(item.id, t, d(t), item.expected(u));
            } catch (const DomainError& e) {
                exclude_note(report, t, e.what());
            }
        }
    }
    report.finalize_pass_fail(kIdentityTolerance);
    return report;
}

// ---------------------------------------------------------------------------
// Witness location: uniform scan for a bracket, then bisection.

namespace {

std::optional<WitnessResult> locate_witness(const std::function<double(double)>& op, double a,
                                            double b, double target) {
    const double h = (b - a) / kScanPoints;
    std::vector<double> ts(kScanPoints + 1), vs(kScanPoints + 1);
    bool all_small = true;
    for (int i = 0; i <= kScanPoints; ++i) {
        ts[i] = (i == kScanPoints) ? b : a + i * h;
        vs[i] = op(ts[i]) - target;
        all_small = all_small && std::fabs(vs[i]) <= kWitnessTolerance;
    }
    // When the target is attained everywhere, any interior point serves;
    // report the midpoint.
    if (all_small) {
        const double mid = 0.5 * (a + b);
        return WitnessResult{mid, target, op(mid), 0};
    }
    for (int i = 1; i < kScanPoints; ++i) {
        if (vs[i] == 0.0) return WitnessResult{ts[i], target, op(ts[i]), 0};
    }
    for (int i = 0; i < kScanPoints; ++i) {
        if (vs[i] * vs[i + 1] >= 0.0) continue;
        double lo = ts[i], hi = ts[i + 1], flo = vs[i];
        int iters = 0;
        while (hi - lo > 1e-13 * std::max(1.0, std::fabs(hi)) && iters < 200) {
            const double mid = 0.5 * (lo + hi);
            const double fm = op(mid) - target;
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
            ++iters;
        }
        const double c = 0.5 * (lo + hi);
        return WitnessResult{c, target, op(c), iters};
    }
    return std::nullopt;
}

}  // namespace

WitnessResult find_rolle_witness(const Expr& f, double a, double b, Alpha alpha,
                                 const WeightSpec& w) {
    if (!(a > 0.0) || !(b > a)) throw ParameterError("need 0 < a < b");
    if (std::fabs(eval_at(f, a) - eval_at(f, b)) > 1e-12)
        throw ParameterError("f(a) and f(b) must agree to 1e-12");
    const ExactOperator d(f, alpha, w);
    auto witness = locate_witness([&](double t) { return d(t); }, a, b, 0.0);
    if (!witness)
        throw NoWitnessError("no zero of the derivative located on a " +
                             std::to_string(kScanPoints) + "-point scan");
    if (std::fabs(witness->achieved_value) > kWitnessTolerance)
        throw NoWitnessError("scan bracketed a sign change but |D f(c)| stayed above 1e-9");
    return *witness;
}

MvtWitness find_mvt_witness(const Expr& f, double a, double b, Alpha alpha, const WeightSpec& w) {
    if (!(a > 0.0) || !(b > a)) throw ParameterError("need 0 < a < b");
    if (w.depends_on_t())
        throw WeightClassError("mean-value construction requires a weight constant in t");
    const double al = alpha.value();
    const double wv = w(1.0, al);
    const double delta = eval_at(f, b) - eval_at(f, a);
    const double corrected = al * wv * delta / (std::pow(b, al) - std::pow(a, al));
    const double printed = al * wv * delta / (b - a);

    const ExactOperator d(f, alpha, w);
    const auto op = [&](double t) { return d(t); };

    MvtWitness out;
    out.corrected_target = corrected;
    out.printed_target = printed;

    auto main_witness = locate_witness(op, a, b, corrected);
    if (!main_witness ||
        std::fabs(main_witness->achieved_value - corrected) >
            kWitnessTolerance * (1.0 + std::fabs(corrected)))
        throw NoWitnessError("no interior point attains the corrected mean-value constant");
    out.corrected = *main_witness;

    auto printed_witness = locate_witness(op, a, b, printed);
    if (printed_witness && std::fabs(printed_witness->achieved_value - printed) <=
                             kWitnessTolerance * (1.0 + std::fabs(printed))) {
        out.printed_attainable = true;
        out.printed_c = printed_witness->c;
        out.note = "printed constant attained at c=" + format_shortest(printed_witness->c);
    } else {
        out.printed_attainable = false;
        out.note = "printed constant " + format_shortest(printed) +
                   " admits no witness in (" + format_shortest(a) + "," + format_shortest(b) +
                   "); denominator b^alpha - a^alpha is required for the auxiliary function "
                   "to vanish at b";
    }
    return out;
}

PropertyReport leibniz_counterexample_higher(Alpha alpha, const WeightSpec& w, double t) {
    const double a = alpha.value();
    if (!(a > 1.0 && a <= 2.0))
        throw AlphaError("counterexample is stated for alpha in (1,2]");
    if (!(t > 0.0)) throw DomainError("requires t > 0");
    const Expr tv = Expr::variable("t");
    const Expr product = tv * tv;
    const double lhs = gfd_higher(product, alpha, w, t);
    const double d_t = gfd_higher(tv, alpha, w, t);
    const double rhs = 2.0 * t * d_t;  // f D(g) + g D(f) with f = g = t

    PropertyReport report;
    report.property_id = "leibniz_higher_gap";
    report.inputs = "f=g=t alpha=" + format_shortest(a) + " w=" + w.describe() +
                    " t=" + format_shortest(t);
    report.add_row(t, lhs, rhs);
    report.finalize_audit();
    const double gap = std::fabs(lhs - rhs);
    report.verdict = gap > 1e-6 ? Verdict::Pass : Verdict::Fail;
    report.tolerance = 1e-6;
    report.note("gap = 2 w t^(ceil(alpha)-alpha) = " + format_shortest(gap));
    return report;
}

}  // namespace gfd
