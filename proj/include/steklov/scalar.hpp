// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace steklov {

// Arbitrary-precision real, precision set at runtime (decimal digits).
using Scalar = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Working precision for all Scalars created afterwards. Call once at startup
// (and in test mains). Minimum accepted is 30 digits.
void set_working_digits(unsigned digits);
unsigned working_digits();

// Default precision from the STEKLOV_DIGITS environment variable, or 50.
unsigned digits_from_env();

Scalar pi_value();

Scalar scalar_from(const Rational& q);
Scalar scalar_from(const BigInt& z);

// base^e by repeated squaring; e may be negative.
Scalar pow_int(const Scalar& base, long e);

// base^e as exp(e log base); requires base > 0.
Scalar pow_scalar(const Scalar& base, const Scalar& e);

// 10^(slack - working_digits()), the usual shape of relative tolerances here.
Scalar rel_tolerance(int slack);

}  // namespace steklov
