#include "gfd/sampling.hpp"

namespace gfd {

std::uint64_t ExprSampler::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double ExprSampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int ExprSampler::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

Expr ExprSampler::safe_expr(int max_depth, const std::string& var) {
    if (max_depth <= 0) {
        if (uniform_int(0, 2) == 0) return Expr::constant(uniform(0.3, 2.5));
        return Expr::variable(var);
    }
    switch (uniform_int(0, 9)) {
        case 0:
            return safe_expr(max_depth - 1, var) + safe_expr(max_depth - 1, var);
        case 1:
            return safe_expr(max_depth - 1, var) - safe_expr(max_depth - 1, var);
        case 2:
        case 3:
            return safe_expr(max_depth - 1, var) * safe_expr(max_depth - 1, var);
        case 4:
            // denominator bounded away from zero
            return safe_expr(max_depth - 1, var) /
                   (Expr::constant(2.0) + Expr::sin(safe_expr(max_depth - 1, var)));
        case 5:
            return Expr::sin(safe_expr(max_depth - 1, var));
        case 6:
            return Expr::cos(safe_expr(max_depth - 1, var));
        case 7:
            // damp the argument so nested exponentials stay representable
            return Expr::exp(Expr::constant(uniform(0.1, 0.4)) * safe_expr(max_depth - 1, var));
        case 8:
            return Expr::pow(Expr::variable(var), Expr::constant(uniform_int(1, 3)));
        default:
            return Expr::sqrt(Expr::variable(var));
    }
}

}  // namespace gfd
