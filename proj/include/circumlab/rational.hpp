// Copyright 2026 The circumlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCUMLAB_RATIONAL_HPP_
#define CIRCUMLAB_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace circumlab {

// Small exact fraction for per-vertex shares uc/|C|. Always reduced, den > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw std::domain_error("fraction with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / den; }
  bool is_zero() const { return num == 0; }
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b) {
    const __int128 l = static_cast<__int128>(a.num) * b.den;
    const __int128 r = static_cast<__int128>(b.num) * a.den;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
};

// Unbounded rational for sums over many vertices.
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational to_big(const Fraction& f) {
  return BigRational(boost::multiprecision::cpp_int(f.num),
                     boost::multiprecision::cpp_int(f.den));
}

inline std::string numerator_str(const BigRational& q) {
  return boost::multiprecision::numerator(q).str();
}

inline std::string denominator_str(const BigRational& q) {
  return boost::multiprecision::denominator(q).str();
}

inline BigRational parse_rational(const std::string& num,
                                  const std::string& den) {
  using boost::multiprecision::cpp_int;
  cpp_int d(den);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return BigRational(cpp_int(num), d);
}

inline double to_double(const BigRational& q) {
  return q.convert_to<double>();
}

}  // namespace circumlab

#endif  // CIRCUMLAB_RATIONAL_HPP_
