#ifndef GFD_OPERATORS_HPP
#define GFD_OPERATORS_HPP

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "gfd/expr.hpp"
#include "gfd/report.hpp"
#include "gfd/weights.hpp"

namespace gfd {

/// Fractional order. Positive; classified into (0,1] or (n, n+1].
class Alpha {
  public:
    explicit Alpha(double v) : value_(v) {
        if (!(v > 0.0)) throw AlphaError("alpha must be positive");
    }
    double value() const { return value_; }
    /// Smallest integer >= alpha.
    int ceil_order() const { return static_cast<int>(std::ceil(value_)); }
    bool in_unit_interval() const { return value_ <= 1.0; }

  private:
    double value_;
};

struct ExactReduction {};

/// Symmetric difference quotient with step h in (0, 1e-2]. The shift
/// direction is whatever the operator's defining limit prescribes.
struct LimitQuotient {
    double h = 1e-6;
};

class EvalMethod {
  public:
    EvalMethod(ExactReduction) : limit_(false) {}
    EvalMethod(LimitQuotient q) : limit_(true), h_(q.h) {
        if (!(q.h > 0.0) || q.h > 1e-2) throw StepError("limit step h must be in (0, 1e-2]");
    }
    bool is_limit() const { return limit_; }
    double h() const { return h_; }

  private:
    bool limit_;
    double h_ = 0.0;
};

/// Which member of the derivative family to apply.
class OperatorKind {
  public:
    enum class Tag { Gfd, Khalil, AndersonUlness, Katugampola, GuebbaiGhiat, Camrud, CaputoL1 };

    static OperatorKind gfd(WeightSpec w) { return OperatorKind(Tag::Gfd, std::move(w), 0.0); }
    static OperatorKind khalil() { return OperatorKind(Tag::Khalil, WeightSpec::one(), 0.0); }
    static OperatorKind anderson_ulness() {
        return OperatorKind(Tag::AndersonUlness, WeightSpec::one(), 0.0);
    }
    static OperatorKind katugampola() {
        return OperatorKind(Tag::Katugampola, WeightSpec::one(), 0.0);
    }
    static OperatorKind guebbai_ghiat() {
        return OperatorKind(Tag::GuebbaiGhiat, WeightSpec::one(), 0.0);
    }
    static OperatorKind camrud() { return OperatorKind(Tag::Camrud, WeightSpec::one(), 0.0); }
    static OperatorKind caputo_l1(double lower) {
        return OperatorKind(Tag::CaputoL1, WeightSpec::one(), lower);
    }

    Tag tag() const { return tag_; }
    const WeightSpec& weight() const { return weight_; }
    double caputo_lower() const { return caputo_lower_; }
    std::string name() const;

  private:
    OperatorKind(Tag t, WeightSpec w, double lower)
        : tag_(t), weight_(std::move(w)), caputo_lower_(lower) {}
    Tag tag_;
    WeightSpec weight_;
    double caputo_lower_;
};

/// Weighted fractional derivative of f at t > 0 for alpha in (0,1].
///
/// ExactReduction evaluates w(t,alpha) * t^(1-alpha) * f'(t) with the
/// symbolic derivative; LimitQuotient evaluates the symmetric quotient
/// (f(t + s*h) - f(t - s*h)) / (2h) with shift s = w * t^(1-alpha).
double gfd_derivative(const Expr& f, Alpha alpha, const WeightSpec& w, double t,
                      const EvalMethod& method);

/// One of the named operators at (alpha, t). ExactReduction uses each
/// operator's closed form; LimitQuotient evaluates its defining quotient
/// (symmetrized). Guebbai-Ghiat and Camrud require f(t) > 0 and f'(t) >= 0.
double named_derivative(const OperatorKind& kind, const Expr& f, Alpha alpha, double t,
                        const EvalMethod& method, int caputo_steps = 1000);

/// Integral-form derivative of order alpha in (0,1) with lower limit a,
/// by midpoint product integration on a uniform grid: f' is frozen at
/// each cell midpoint and the singular kernel integrated exactly. The
/// error decays like h^(2-alpha).
double caputo(const Expr& f, Alpha alpha, double a, double t, int n_steps);

/// The weight that represents `kind` inside the weighted family at (alpha, t):
/// named_derivative(kind) / (t^(1-alpha) * f'(t)). Requires f'(t) != 0.
double weight_of(const OperatorKind& kind, const Expr& f, Alpha alpha, double t);

/// Higher-order extension: w(t,alpha) * t^(ceil(alpha)-alpha) * f^(ceil(alpha))(t)
/// via iterated symbolic differentiation. Valid for any alpha > 0.
double gfd_higher(const Expr& f, Alpha alpha, const WeightSpec& w, double t);

/// Audit of the "w = 1 iff alpha = 1" contract over sample points:
/// PASS when w(t,1) = 1 everywhere and w(t,alpha) differs from 1 (beyond
/// 1e-12) wherever alpha < 1. Violations are listed, not thrown.
PropertyReport validate_weight(const WeightSpec& w,
                               std::span<const std::pair<double, double>> t_alpha_samples);

}  // namespace gfd

#endif
