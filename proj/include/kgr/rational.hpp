#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace kgr {

// Exact scalar type for all cylinder-function coefficients.
using Rational = boost::rational<long long>;

inline std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace kgr
