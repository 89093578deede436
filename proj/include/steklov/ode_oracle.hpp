// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "steklov/annulus_pencil.hpp"

namespace steklov {

struct ShootingConfig {
    int integration_steps = 2048;
    Scalar root_tolerance = Scalar("1e-30");  // absolute, on the eigenvalue
    int max_step_doublings = 3;
    // tiny holes belong to the asymptotic models; the scaled pencil covers
    // them directly, so the oracle refuses eps < 0.05 unless overridden
    bool allow_tiny_eps = false;
};

// Fundamental matrix of the radial equation in t = log r, propagated from
// t = log(eps) to t = 0 with identity initial data. State components are
// (f, Df, D^2 f, D^3 f), D = d/dt. Never touches the closed-form basis.
Matrix4 shoot_fundamental(Dimension n, int k, const Scalar& eps, int steps);

// Determinant of the shot boundary system at a trial eigenvalue; zero exactly
// at the eigenvalues of the separated problem.
Scalar shoot_determinant(ProblemKind kind, const AnnulusDomain& dom, int k, const Scalar& lambda,
                         const ShootingConfig& cfg = {});

// Root of the shot determinant inside [lo, hi]; requires a sign change.
// Secant-accelerated bisection down to cfg.root_tolerance.
Scalar oracle_eigenvalue(ProblemKind kind, const AnnulusDomain& dom, int k, const Scalar& lo,
                         const Scalar& hi, const ShootingConfig& cfg = {});

}  // namespace steklov
