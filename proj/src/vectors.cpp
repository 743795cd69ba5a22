#include "polyball/vectors.hpp"

#include <stdexcept>

namespace polyball {

BigRational dot(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot(const VectorD& a, const VectorD& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VectorD to_double_vector(const VectorQ& x) {
  VectorD out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = to_double(x[i]);
  return out;
}

VectorQ parse_vector(const std::string& csv) {
  VectorQ out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string token =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_rational(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace polyball
