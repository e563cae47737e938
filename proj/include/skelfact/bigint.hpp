#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skelfact {

// All counting formulas are evaluated exactly; binomials up to n = 200
// exceed 128 bits, so an arbitrary-precision integer is used throughout.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace skelfact
