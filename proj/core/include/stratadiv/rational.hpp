#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stratadiv {

// All coefficient arithmetic in this library is exact. No floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace stratadiv
