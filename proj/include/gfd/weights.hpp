#ifndef GFD_WEIGHTS_HPP
#define GFD_WEIGHTS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gfd/expr.hpp"

namespace gfd {

/// The pluggable weight function w(t, alpha) that parameterizes the
/// derivative family. Presets cover the forms the named operators use;
/// TauScaled builds w = g(t, alpha) * tau^(alpha-1) from a base expression
/// and a positive scale, and Custom accepts any expression in t, alpha, tau.
class WeightSpec {
  public:
    enum class Kind { One, AlphaConst, PowerT, TauScaled, Custom };

    static WeightSpec one();
    static WeightSpec alpha_const();           // w = alpha
    static WeightSpec power_t();               // w = t^(1-alpha)
    static WeightSpec tau_scaled(Expr g, double tau);
    static WeightSpec custom(Expr w, double tau = 1.0);
    static WeightSpec constant(double value);  // Custom with a literal

    Kind kind() const { return kind_; }
    double tau() const { return tau_; }

    /// w evaluated at (t, alpha).
    double operator()(double t, double alpha) const;

    /// True when the weight genuinely varies with t.
    bool depends_on_t() const;

    /// Symbolic w as an expression in t for a fixed alpha (alpha and tau
    /// substituted by constants).
    Expr as_expr(double alpha) const;

    /// Round-trips through parse_weight_spec: "one", "alpha", "power-t",
    /// "tau:<g>:<tau>", "custom:<expr>".
    std::string describe() const;

  private:
    WeightSpec(Kind k, std::optional<Expr> e, double tau);
    Kind kind_;
    std::optional<Expr> expr_;  // TauScaled: g(t, alpha); Custom: w(t, alpha, tau)
    double tau_ = 1.0;
};

/// Parse the CLI weight grammar: one | alpha | power-t | tau:<g>:<tau> |
/// custom:<expr>. Throws ParseError / ParameterError on bad input.
WeightSpec parse_weight_spec(std::string_view text);

}  // namespace gfd

#endif
