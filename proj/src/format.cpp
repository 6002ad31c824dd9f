#include "pnw/format.hpp"

#include <charconv>
#include <cmath>

namespace pnw {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_real(const HighPrecision& v) { return format_real(v.convert_to<double>()); }

double log2_big(const BigInt& v) {
    if (v <= 0) return -INFINITY;
    const std::size_t top = boost::multiprecision::msb(v);
    if (top < 53) return std::log2(v.convert_to<double>());
    // Keep the leading 53 bits and account for the shift separately.
    const std::size_t shift = top - 52;
    const BigInt head = v >> shift;
    return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace pnw
