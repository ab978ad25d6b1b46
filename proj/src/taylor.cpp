#include "gfd/taylor.hpp"

#include <cmath>

#include "gfd/format.hpp"

namespace gfd {

double rising_factorial(double alpha, int i) {
    if (i < 1) throw ParameterError("rising factorial needs i >= 1");
    double acc = 1.0;
    for (int k = 0; k < i; ++k) acc *= alpha + k;
    return acc;
}

FracTaylorSeries taylor_build(const Expr& f, double x0, Alpha alpha, const WeightSpec& w, int N) {
    if (N < 0) throw ParameterError("truncation order must be non-negative");
    if (w.depends_on_t())
        throw WeightClassError("the series treats the weight as a constant; got w = " +
                               w.describe());
    const double a = alpha.value();
    const double wv = w(1.0, a);

    FracTaylorSeries s;
    s.x0 = x0;
    s.alpha = a;
    s.weight_value = wv;
    s.truncation = N;
    if (a <= 1.0) {
        s.regime = TaylorRegime::R1;
    } else if (a <= 2.0) {
        s.regime = TaylorRegime::R2;
    } else {
        s.regime = TaylorRegime::R3;
        s.n = alpha.ceil_order() - 1;
        s.a_frac = a - s.n;
    }

    // Classical derivatives D^i f(x0), i = 0..N, by iterated differentiation.
    std::vector<double> deriv_at(N + 1);
    Expr d = f;
    Bindings at_x0{{"x", x0}};
    for (int i = 0; i <= N; ++i) {
        deriv_at[i] = d.evaluate(at_x0);
        if (i < N) d = d.differentiate("x").simplify();
    }

    s.terms.push_back({0.0, deriv_at[0]});
    switch (s.regime) {
        case TaylorRegime::R1:
            for (int i = 1; i <= N; ++i)
                s.terms.push_back({a + i - 1.0, deriv_at[i] / (wv * rising_factorial(a, i))});
            break;
        case TaylorRegime::R2:
            if (N >= 1) s.terms.push_back({1.0, deriv_at[1]});
            for (int i = 2; i <= N; ++i)
                s.terms.push_back(
                    {a + i - 2.0, deriv_at[i] / (wv * rising_factorial(a - 1.0, i))});
            break;
        case TaylorRegime::R3: {
            double factorial = 1.0;
            for (int i = 1; i <= std::min(s.n, N); ++i) {
                factorial *= i;
                s.terms.push_back({static_cast<double>(i), deriv_at[i] / factorial});
            }
            for (int i = s.n + 1; i <= N; ++i)
                s.terms.push_back(
                    {s.a_frac + i - 1.0, deriv_at[i] / (wv * rising_factorial(s.a_frac, i))});
            break;
        }
    }
    return s;
}

double taylor_eval(const FracTaylorSeries& series, double x) {
    const double dx = x - series.x0;
    if (dx < 0.0)
        throw DomainError("series evaluation requires x >= x0, got x = " + format_shortest(x));
    double acc = 0.0;
    for (const auto& term : series.terms) {
        if (term.exponent == 0.0) {
            acc += term.coefficient;
        } else if (dx > 0.0) {
            acc += term.coefficient * std::pow(dx, term.exponent);
        }
    }
    return acc;
}

}  // namespace gfd
