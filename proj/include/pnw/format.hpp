#pragma once

#include <string>

#include "pnw/bigint.hpp"

namespace pnw {

// Shortest decimal text that round-trips to the same double; "nan"/"inf" otherwise.
std::string format_real(double v);
std::string format_real(const HighPrecision& v);

}  // namespace pnw
