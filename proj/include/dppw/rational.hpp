#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dppw {

// Exact rational scalar used throughout the library.  All arithmetic in this
// project is exact; there is no floating-point code path anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct singular_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical serialization: "p" for integers, "p/q" with q > 0 otherwise.
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

// Accepts "p", "-p", or "p/q" with q > 0.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t, bool allow_sign) {
    if (t.empty()) throw parse_error("bad rational literal: " + s);
    std::size_t start = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) start = 1;
    if (start == t.size()) throw parse_error("bad rational literal: " + s);
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw parse_error("bad rational literal: " + s);
  };
  if (slash == std::string::npos) {
    check_int(s, true);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  Integer q(den);
  if (q <= 0) throw parse_error("denominator must be positive: " + s);
  return Rational(Integer(num), q);
}

}  // namespace dppw
