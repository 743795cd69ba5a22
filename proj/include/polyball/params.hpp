#pragma once

#include "polyball/rational.hpp"

#include <stdexcept>

namespace polyball {

// Dimension d >= 1 and interpolation parameter k with 1 <= k <= d.
// k is an exact rational, never a float: every downstream case split
// branches on floor(k) or on the integrality of k.
class Params {
 public:
  Params(int d, BigRational k) : d_(d), k_(std::move(k)) {
    if (d_ < 1) throw std::domain_error("Params: d must be a positive integer");
    if (k_ < 1 || k_ > d_) throw std::domain_error("Params: k must lie in [1, d]");
  }
  Params(int d, long k) : Params(d, BigRational(k)) {}

  int d() const { return d_; }
  const BigRational& k() const { return k_; }
  long floor_k() const { return floor_rat(k_).convert_to<long>(); }
  bool k_is_integer() const { return is_integer(k_); }
  long k_as_integer() const {
    if (!k_is_integer()) throw std::domain_error("Params: k is not an integer");
    return floor_k();
  }
  double k_double() const { return to_double(k_); }

 private:
  int d_;
  BigRational k_;
};

}  // namespace polyball
