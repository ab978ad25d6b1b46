#include "gfd/format.hpp"

#include <charconv>
#include <cmath>

namespace gfd {

std::string format_shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

std::string format_sig17(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

double rel_residual(double lhs, double rhs) {
    return std::fabs(lhs - rhs) / (1.0 + std::max(std::fabs(lhs), std::fabs(rhs)));
}

}  // namespace gfd
