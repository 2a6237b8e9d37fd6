#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace degenum {

/// Exact arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

}  // namespace degenum
