#ifndef GFD_RING_HPP
#define GFD_RING_HPP

#include <span>
#include <string>

#include "gfd/operators.hpp"
#include "gfd/report.hpp"

namespace gfd {

/// Additivity with scalars: D(a f + b g) = a D(f) + b D(g) over a positive
/// grid, exact path, expected to PASS within 1e-9 relative.
PropertyReport check_linearity(const Expr& f, const Expr& g, double a, double b, Alpha alpha,
                               const WeightSpec& w, std::span<const double> grid);

/// Product rule: D(f g) = f D(g) + g D(f); expected PASS within 1e-9.
PropertyReport check_leibniz(const Expr& f, const Expr& g, Alpha alpha, const WeightSpec& w,
                             std::span<const double> grid);

/// Quotient rule: D(f/g) = (g D(f) - f D(g)) / g^2; points where |g| < 1e-12
/// are excluded with a note. Expected PASS within 1e-9.
PropertyReport check_quotient(const Expr& f, const Expr& g, Alpha alpha, const WeightSpec& w,
                              std::span<const double> grid);

/// The two defensible readings of the middle factor in the claimed chain
/// rule D(f∘g) = (t^(alpha-1)/w) * D(f(g)) * D(g).
enum class ChainReading {
    CompositeInT,   // apply the operator in t to the composite f(g(t))
    OuterAtInner,   // evaluate the operator of f at the point g(t)
};

/// Audit of the claimed chain rule. `f` is an expression in x, `g` in t.
/// Neither reading is an identity in general, so the verdict is always
/// AUDIT with residuals recorded. OuterAtInner requires g > 0 on the grid.
PropertyReport check_chain(const Expr& f, const Expr& g, Alpha alpha, const WeightSpec& w,
                           std::span<const double> grid, ChainReading reading);

/// Audit of the claimed composition law
/// D^(a+b)(f) = (w_a w_b t / w_(a+b)) * D^a(D^b(f)), together with the
/// condition w_(a+b)/(w_a w_b) = t under which plain semigroup composition
/// is claimed to hold. AUDIT only: the right side is second order in f
/// while the left is first order.
PropertyReport check_composition_law(const Expr& f, Alpha alpha, Alpha beta,
                                     const WeightSpec& w, std::span<const double> grid);

/// The four closed-form identities for D applied to u, sin(u), cos(u),
/// exp(u) with u = t^alpha/(alpha w). Only weights constant in t are
/// accepted (WeightClassError otherwise). Expected PASS within 1e-10.
PropertyReport check_identities(Alpha alpha, const WeightSpec& w, std::span<const double> grid);

/// Interior point where D f vanishes, given f(a) = f(b) (within 1e-12).
/// Located by a 10^4-point scan plus bisection; |D f(c)| <= 1e-9 at the
/// returned c. Throws NoWitnessError when no sign change is found.
WitnessResult find_rolle_witness(const Expr& f, double a, double b, Alpha alpha,
                                 const WeightSpec& w);

/// Mean-value witness. `corrected` solves D f(c) = alpha w (f(b)-f(a)) /
/// (b^alpha - a^alpha), the constant forced by the auxiliary-function
/// construction. The printed constant with denominator (b-a) is also
/// scanned for: `printed_attainable`/`printed_c` record whether any interior
/// point reaches it.
struct MvtWitness {
    WitnessResult corrected;
    double corrected_target = 0.0;
    double printed_target = 0.0;
    bool printed_attainable = false;
    double printed_c = 0.0;  // valid only when printed_attainable
    std::string note;
};

MvtWitness find_mvt_witness(const Expr& f, double a, double b, Alpha alpha, const WeightSpec& w);

/// Concrete failure of the product rule above order one: with f = g = t and
/// alpha in (1,2], D(fg) = 2 w t^(ceil(alpha)-alpha) while f D(g) + g D(f) = 0.
/// PASSes when the gap exceeds 1e-6.
PropertyReport leibniz_counterexample_higher(Alpha alpha, const WeightSpec& w, double t);

}  // namespace gfd

#endif
