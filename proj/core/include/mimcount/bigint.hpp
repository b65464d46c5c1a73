#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mimcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace mimcount
