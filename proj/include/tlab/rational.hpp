#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace tlab {

using Rational = boost::rational<std::int64_t>;

/// Largest integer not exceeding r (boost's rational_cast truncates toward zero).
inline std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tlab
