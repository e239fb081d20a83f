#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace weilcalc {

// Exact rational scalar used everywhere in the core. No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

inline std::string to_string(const Rat& r) {
  return r.str();
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Integer value of an exact-integer rational; caller must check is_integer.
inline long to_long(const Rat& r) {
  return static_cast<long>(numerator(r));
}

}  // namespace weilcalc
