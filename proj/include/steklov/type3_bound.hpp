// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "steklov/geometry.hpp"

namespace steklov {

// Measures of a bounded domain for the third problem
//   Delta^2 u - tau Delta u = 0 with the spectral parameter rho on the
//   boundary. The star-shaped / mean-convex hypothesis cannot be checked from
//   measures alone; the caller asserts it and the flag rides along.
struct DomainMeasures {
    Dimension n;
    Scalar volume;
    Scalar boundary_area;
    Scalar tau;
    bool star_shaped_mean_convex;

    DomainMeasures(Dimension dim, Scalar vol, Scalar area, Scalar tau_param, bool hypotheses);
};

// Sharp upper bound for the first non-zero eigenvalue:
//   n tau |O| |dO| ((n-1)/n w (|dO|/w)^{n/(n-1)} + |O|)^{-2},  w = |S^{n-1}|,
// with equality exactly on balls.
Scalar first_eigenvalue_bound(const DomainMeasures& m);

// Young-relaxed form n^{1-2/n} w^{2/n} tau |O|^{1-2/n} / |dO|; never below the
// sharp bound.
Scalar first_eigenvalue_bound_weak(const DomainMeasures& m);

// On the ball of radius r the first non-zero eigenvalue is tau / r.
Scalar ball_first_eigenvalue(Dimension n, const Scalar& r, const Scalar& tau);

// tau * p_k is a lower bound for the k-th eigenvalue, where p_k is the k-th
// second-order Steklov eigenvalue; equality on balls for k = 1.
Scalar second_order_lower_bound(const Scalar& tau, const Scalar& p_k);

}  // namespace steklov
