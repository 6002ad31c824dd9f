#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pnw {

using BigInt = boost::multiprecision::cpp_int;
// 100 decimal digits; used where tail probabilities act as oracles.
using HighPrecision = boost::multiprecision::cpp_bin_float_100;

inline std::string to_string(const BigInt& v) { return v.str(); }

// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& v);

}  // namespace pnw
