#ifndef GFD_SAMPLING_HPP
#define GFD_SAMPLING_HPP

#include <cstdint>

#include "gfd/expr.hpp"

namespace gfd {

/// Deterministic generator of random expressions and draws, independent of
/// the standard library's distribution implementations so that seeded runs
/// are reproducible everywhere.
class ExprSampler {
  public:
    explicit ExprSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64();
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds

    /// Expression in `var` that is defined and smooth for all t > 0:
    /// leaves are bounded constants and the variable; operations avoid
    /// unprotected division and fractional powers of sign-changing parts.
    Expr safe_expr(int max_depth, const std::string& var = "t");

  private:
    std::uint64_t state_;
};

}  // namespace gfd

#endif
