#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pierce {

// Exact arbitrary-precision arithmetic. The geometry kernel admits no
// floating point: integer inputs, rational intersection points.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

} // namespace pierce
