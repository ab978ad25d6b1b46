#include "gfd/weights.hpp"

#include <charconv>
#include <cmath>

#include "gfd/format.hpp"

namespace gfd {

WeightSpec::WeightSpec(Kind k, std::optional<Expr> e, double tau)
    : kind_(k), expr_(std::move(e)), tau_(tau) {}

WeightSpec WeightSpec::one() { return WeightSpec(Kind::One, std::nullopt, 1.0); }
WeightSpec WeightSpec::alpha_const() { return WeightSpec(Kind::AlphaConst, std::nullopt, 1.0); }
WeightSpec WeightSpec::power_t() { return WeightSpec(Kind::PowerT, std::nullopt, 1.0); }

WeightSpec WeightSpec::tau_scaled(Expr g, double tau) {
    if (!(tau > 0.0)) throw ParameterError("tau must be positive");
    return WeightSpec(Kind::TauScaled, std::move(g), tau);
}

WeightSpec WeightSpec::custom(Expr w, double tau) {
    if (!(tau > 0.0)) throw ParameterError("tau must be positive");
    return WeightSpec(Kind::Custom, std::move(w), tau);
}

WeightSpec WeightSpec::constant(double value) { return custom(Expr::constant(value)); }

double WeightSpec::operator()(double t, double alpha) const {
    switch (kind_) {
        case Kind::One:
            return 1.0;
        case Kind::AlphaConst:
            return alpha;
        case Kind::PowerT: {
            if (t <= 0.0) throw DomainError("power-t weight requires t > 0");
            return std::pow(t, 1.0 - alpha);
        }
        case Kind::TauScaled: {
            Bindings b{{"t", t}, {"alpha", alpha}};
            return expr_->evaluate(b) * std::pow(tau_, alpha - 1.0);
        }
        case Kind::Custom: {
            Bindings b{{"t", t}, {"alpha", alpha}, {"tau", tau_}};
            return expr_->evaluate(b);
        }
    }
    throw Error("corrupt weight spec");
}

bool WeightSpec::depends_on_t() const {
    switch (kind_) {
        case Kind::One:
        case Kind::AlphaConst:
            return false;
        case Kind::PowerT:
            return true;
        default:
            return expr_->depends_on("t");
    }
}

Expr WeightSpec::as_expr(double alpha) const {
    switch (kind_) {
        case Kind::One:
            return Expr::constant(1.0);
        case Kind::AlphaConst:
            return Expr::constant(alpha);
        case Kind::PowerT:
            return Expr::pow(Expr::variable("t"), 1.0 - alpha);
        case Kind::TauScaled: {
            Expr g = expr_->substitute("alpha", Expr::constant(alpha));
            return (std::move(g) * Expr::constant(std::pow(tau_, alpha - 1.0))).simplify();
        }
        case Kind::Custom: {
            Expr w = expr_->substitute("alpha", Expr::constant(alpha))
                         .substitute("tau", Expr::constant(tau_));
            return w.simplify();
        }
    }
    throw Error("corrupt weight spec");
}

std::string WeightSpec::describe() const {
    switch (kind_) {
        case Kind::One:
            return "one";
        case Kind::AlphaConst:
            return "alpha";
        case Kind::PowerT:
            return "power-t";
        case Kind::TauScaled:
            return "tau:" + expr_->to_string() + ":" + format_shortest(tau_);
        case Kind::Custom:
            return "custom:" + expr_->to_string();
    }
    return "?";
}

WeightSpec parse_weight_spec(std::string_view text) {
    if (text == "one") return WeightSpec::one();
    if (text == "alpha") return WeightSpec::alpha_const();
    if (text == "power-t") return WeightSpec::power_t();
    if (text.rfind("tau:", 0) == 0) {
        const std::string_view rest = text.substr(4);
        const std::size_t sep = rest.rfind(':');
        if (sep == std::string_view::npos)
            throw ParseError(text.size(), "expected tau:<g-expr>:<tau>");
        const std::string_view g_text = rest.substr(0, sep);
        const std::string_view tau_text = rest.substr(sep + 1);
        double tau = 0.0;
        auto [end, ec] = std::from_chars(tau_text.data(), tau_text.data() + tau_text.size(), tau);
        if (ec != std::errc() || end != tau_text.data() + tau_text.size())
            throw ParseError(4 + sep + 1, "malformed tau value '" + std::string(tau_text) + "'");
        return WeightSpec::tau_scaled(parse(g_text, weight_variables()), tau);
    }
    if (text.rfind("custom:", 0) == 0) {
        return WeightSpec::custom(parse(text.substr(7), weight_variables()));
    }
    throw ParseError(0, "unknown weight '" + std::string(text) +
                            "' (expected one|alpha|power-t|tau:<g>:<tau>|custom:<expr>)");
}

}  // namespace gfd
