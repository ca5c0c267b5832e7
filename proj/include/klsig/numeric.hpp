#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace klsig {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Unsupported type label, out-of-range painting, malformed weight.
struct ConfigError : Error {
  using Error::Error;
};
/// An argument lies outside the domain of the operation.
struct DomainError : Error {
  using Error::Error;
};
/// A configured size or depth cap was exceeded.
struct CapExceeded : Error {
  using Error::Error;
};
/// A consistency check that should be unreachable failed.
struct InternalError : Error {
  using Error::Error;
};

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline BigInt to_integer(const Rational& r) {
  if (!is_integer(r)) throw DomainError("rational " + r.str() + " is not an integer");
  return boost::multiprecision::numerator(r);
}

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

/// (-1)^k for any integer k.
inline int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace klsig
