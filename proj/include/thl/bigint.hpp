#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace thl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline long long to_ll(const BigInt& x)
{
    return x.convert_to<long long>();
}

}  // namespace thl
