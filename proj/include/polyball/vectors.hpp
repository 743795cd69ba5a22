#pragma once

#include "polyball/rational.hpp"

#include <string>
#include <vector>

namespace polyball {

using VectorQ = std::vector<BigRational>;
using VectorD = std::vector<double>;

BigRational dot(const VectorQ& a, const VectorQ& b);
double dot(const VectorD& a, const VectorD& b);

VectorD to_double_vector(const VectorQ& x);

// Comma-separated rationals, e.g. "3,1,-2" or "1/2,0.25,-1".
VectorQ parse_vector(const std::string& csv);

template <class Scalar>
Scalar from_rational(const BigRational& q);

template <>
inline double from_rational<double>(const BigRational& q) {
  return to_double(q);
}

template <>
inline BigRational from_rational<BigRational>(const BigRational& q) {
  return q;
}

}  // namespace polyball
