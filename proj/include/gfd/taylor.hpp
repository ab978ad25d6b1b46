#ifndef GFD_TAYLOR_HPP
#define GFD_TAYLOR_HPP

#include <vector>

#include "gfd/operators.hpp"

namespace gfd {

/// Rising factorial (Pochhammer symbol): alpha (alpha+1) ... (alpha+i-1),
/// i >= 1 ascending factors.
double rising_factorial(double alpha, int i);

enum class TaylorRegime {
    R1,  // 0 < alpha <= 1: constant plus terms (x-x0)^(alpha+i-1)
    R2,  // 1 < alpha <= 2: constant, linear head, terms (x-x0)^(alpha+i-2)
    R3,  // alpha = n + A, n >= 2: classical head of degree n, A-shifted tail
};

/// Truncated fractional power series around x0. `terms` holds every
/// contribution, the constant included, with strictly increasing exponents.
struct FracTaylorSeries {
    struct Term {
        double exponent;
        double coefficient;
    };

    double x0 = 0.0;
    double alpha = 1.0;
    double weight_value = 1.0;  // w enters as a single constant factor
    TaylorRegime regime = TaylorRegime::R1;
    int n = 0;           // R3: integer part of alpha
    double a_frac = 0.0;  // R3: alpha - n
    int truncation = 0;   // upper summation index N
    std::vector<Term> terms;
};

/// Build the series for `f` (an expression in x) at x0 with truncation N.
/// Derivatives are classical, by iterated symbolic differentiation. The
/// weight must be constant in t (WeightClassError otherwise); it enters
/// the fractional coefficients as the scalar w(alpha).
FracTaylorSeries taylor_build(const Expr& f, double x0, Alpha alpha, const WeightSpec& w, int N);

/// Sum of the truncated series at x >= x0.
double taylor_eval(const FracTaylorSeries& series, double x);

}  // namespace gfd

#endif
