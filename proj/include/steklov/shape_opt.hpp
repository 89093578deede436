// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "steklov/annulus_pencil.hpp"

namespace steklov {

struct Measures {
    Scalar volume;
    Scalar boundary_area;
};

// |Omega| = omega (1 - eps^n)/n, |dOmega| = omega (1 + eps^{n-1}).
Measures annulus_measures(const AnnulusDomain& dom);

enum class Normalization { boundary_area, volume, mixed };

// Scale-invariant functionals: eigenvalues scale like c^-3 (type 1) and c^-1
// (type 2) under r -> cr, so the boundary exponents are 3/(n-1) and 1/(n-1).
struct NormalizedValue {
    Scalar raw;
    Normalization normalization;
    Scalar alpha;  // mixed weight; 1 reduces to the boundary normalization
    Scalar value;
};

NormalizedValue normalized_eigenvalue(ProblemKind kind, const Scalar& raw, const Measures& m,
                                      Dimension n, Normalization norm,
                                      const Scalar& alpha = Scalar(1));

enum class Verdict { annulus_greater, ball_greater };

struct ComparisonVerdict {
    Verdict verdict;
    Scalar margin;  // annulus normalized value minus ball normalized value
    Scalar annulus_normalized;
    Scalar ball_normalized;
    bool outside_validated_regime = false;
};

// Boundary-normalized k-th distinct eigenvalue on the annulus against the unit
// ball. Verdicts are only issued for eps <= 0.1 unless explicitly overridden,
// and for type 2 only in dimensions n >= 4.
ComparisonVerdict compare_annulus_vs_ball(ProblemKind kind, Dimension n, int k, const Scalar& eps,
                                          bool allow_outside_validated = false);

}  // namespace steklov
