// SPDX-License-Identifier: Apache-2.0
#include "steklov/scalar.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace steklov {

void set_working_digits(unsigned digits) {
    if (digits < 30) throw std::invalid_argument("working precision must be at least 30 digits");
    Scalar::default_precision(digits);
}

unsigned working_digits() { return Scalar::default_precision(); }

unsigned digits_from_env() {
    const char* env = std::getenv("STEKLOV_DIGITS");
    if (env == nullptr) return 50;
    const long v = std::strtol(env, nullptr, 10);
    if (v < 30) throw std::invalid_argument("STEKLOV_DIGITS must be an integer >= 30");
    return static_cast<unsigned>(v);
}

Scalar pi_value() {
    Scalar v;
    mpfr_const_pi(v.backend().data(), MPFR_RNDN);
    return v;
}

Scalar scalar_from(const Rational& q) {
    Scalar v;
    mpfr_set_q(v.backend().data(), q.backend().data(), MPFR_RNDN);
    return v;
}

Scalar scalar_from(const BigInt& z) {
    Scalar v;
    mpfr_set_z(v.backend().data(), z.backend().data(), MPFR_RNDN);
    return v;
}

Scalar pow_int(const Scalar& base, long e) {
    if (e < 0) return 1 / pow_int(base, -e);
    Scalar result(1);
    Scalar acc = base;
    unsigned long m = static_cast<unsigned long>(e);
    while (m != 0) {
        if (m & 1u) result *= acc;
        m >>= 1u;
        if (m != 0) acc *= acc;
    }
    return result;
}

Scalar pow_scalar(const Scalar& base, const Scalar& e) {
    if (base <= 0) throw std::domain_error("pow_scalar requires a positive base");
    return exp(e * log(base));
}

Scalar rel_tolerance(int slack) {
    return pow_int(Scalar(10), slack - static_cast<long>(working_digits()));
}

}  // namespace steklov
