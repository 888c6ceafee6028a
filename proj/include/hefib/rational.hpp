#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hefib {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when input data violates a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Largest integer <= r. cpp_int division truncates toward zero, so negative
// non-integral values need the extra step down.
inline Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Int to_int_checked(const Rat& r, const char* what) {
  if (!is_integer(r)) {
    throw ValidationError(std::string(what) + " is not an integer: " + r.str());
  }
  return numerator(r);
}

// Canonical text form: "p" when integral, "p/q" otherwise (q > 0, reduced).
inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with optional leading minus signs on either part.
inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() -> Rat {
    throw ValidationError("cannot parse rational from \"" + s + "\"");
  };
  if (s.empty()) return bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return bad();
    Int d(den);
    if (d == 0) throw ValidationError("zero denominator in \"" + s + "\"");
    return Rat(Int(num), d);
  } catch (const std::runtime_error&) {
    return bad();
  }
}

// Fixed-point decimal approximation, display-only helper for --decimal output.
// Rounds toward zero; not used anywhere in computations.
inline std::string rat_to_decimal(const Rat& r, unsigned digits = 6) {
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Int scaled = numerator(r) * scale / denominator(r);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return (neg ? "-" : "") + s;
}

}  // namespace hefib
