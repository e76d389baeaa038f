#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mzv {

// Exact scalar types used everywhere: arbitrary-precision integers for the
// combinatorial counts, rationals over them for polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace mzv
