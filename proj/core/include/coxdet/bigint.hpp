#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace coxdet {

// Exact arbitrary-precision integer. Dimensions of Specht modules overflow
// 64 bits around n = 25, and all counts are required to be exact.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace coxdet
