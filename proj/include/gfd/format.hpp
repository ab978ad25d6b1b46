#ifndef GFD_FORMAT_HPP
#define GFD_FORMAT_HPP

#include <string>

namespace gfd {

/// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double v);

/// 17-significant-digit rendering used by trajectory and residual CSVs.
std::string format_sig17(double v);

/// Relative residual scaled by 1 + magnitude, so it stays meaningful for
/// values near zero: |l - r| / (1 + max(|l|, |r|)).
double rel_residual(double lhs, double rhs);

}  // namespace gfd

#endif
