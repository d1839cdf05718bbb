#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace causalgames {

/// Arbitrary-precision rational. All arithmetic in the library is exact;
/// floating point never enters any verdict or certificate.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Canonical "p/q" form; the denominator is omitted when it is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p", "-p/q", etc. Throws std::runtime_error on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace causalgames
