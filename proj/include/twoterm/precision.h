#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace twoterm {

// 113-bit mantissa, used for root polishing and residual checks.
using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;

// 50 decimal digits, for iterating orbits where quad is not enough.
using Wide = boost::multiprecision::cpp_bin_float_50;
using WideComplex = boost::multiprecision::cpp_complex_50;

}  // namespace twoterm
