#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace adiag {

// Exact arithmetic for everything derived from irrep degrees (amenability
// constants, Plancherel masses). Floating point appears only where explicit
// matrices are unavoidable.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace adiag
