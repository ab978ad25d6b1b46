#ifndef GFD_PARTIAL_HPP
#define GFD_PARTIAL_HPP

#include <span>
#include <string>

#include "gfd/operators.hpp"
#include "gfd/report.hpp"

namespace gfd {

/// One axis of a partial fractional derivative: the variable it acts on,
/// the order, and the weight evaluated in that variable (weight expressions
/// are written in `t`, which stands for the axis coordinate).
struct PartialSpec {
    std::string var;
    Alpha alpha;
    WeightSpec weight;
};

/// Weighted partial fractional derivative at a point with strictly
/// positive coordinates: w(t_i, alpha) * t_i^(1-alpha) * df/dt_i.
double gpfd(const Expr& f, const PartialSpec& spec, const Bindings& point);

/// The same operator applied symbolically, yielding an expression in the
/// remaining variables. Useful for composing axis derivatives.
Expr gpfd_expr(const Expr& f, const PartialSpec& spec);

/// Mixed second-order operator
/// w_j w_i (t_j t_i)^(1-alpha) * d^2 f / dt_j dt_i. Both axes must carry
/// the same order.
double gpfd_second(const Expr& f, const PartialSpec& spec_i, const PartialSpec& spec_j,
                   const Bindings& point);

/// Swapping the two axes of gpfd_second must not change the value: the
/// classical mixed partials commute and the prefactor is symmetric.
/// Expected PASS within 1e-10.
PropertyReport check_mixed_symmetry(const Expr& f, const PartialSpec& spec_i,
                                    const PartialSpec& spec_j,
                                    std::span<const Bindings> points);

}  // namespace gfd

#endif
