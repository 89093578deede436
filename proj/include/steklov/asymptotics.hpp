// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "steklov/annulus_pencil.hpp"

namespace steklov {

// One term c * eps^p * (log eps)^q; coefficients kept exact in (n, k).
struct ExpansionTerm {
    Rational coeff;
    Rational power;
    int log_power = 0;
};

enum class ExactForm { none, reciprocal_one_minus_eps };

// Truncated small-eps expansion of one eigenvalue branch, with the shape of
// the dropped remainder. Exact models carry a closed form instead.
struct AsymptoticModel {
    ProblemKind kind;
    int n = 0;
    int k = 0;
    int branch = 1;
    std::vector<ExpansionTerm> terms;     // sorted by dominance as eps -> 0+
    ExpansionTerm remainder;              // order only; coeff ignored
    ExactForm exact = ExactForm::none;
    Rational exact_prefactor = 0;         // value = prefactor / (1 - eps)
};

AsymptoticModel expansion_type1(Dimension n, int k);
AsymptoticModel expansion_type2(Dimension n, int k, int branch = 1);

Scalar evaluate(const AsymptoticModel& model, const Scalar& eps);

// (pencil branch-1 root - leading constant) / eps^p, the empirical estimate of
// the first correction coefficient.
Scalar first_correction_estimate(ProblemKind kind, Dimension n, int k, const Scalar& eps);

struct OrderReport {
    Scalar eps1, eps2;
    Scalar err1, err2;
    Scalar fitted_order;
    Rational expected_power;
    int expected_log_power = 0;
    bool exact_case = false;
    bool pass = false;
};

// Fit the empirical remainder order of `model` against high-precision pencil
// roots at eps1 > eps2; log-corrected when the remainder carries log factors.
OrderReport verify_order(ProblemKind kind, Dimension n, int k, const Scalar& eps1,
                         const Scalar& eps2, int branch = 1);

}  // namespace steklov
