// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "steklov/scalar.hpp"

namespace steklov {

// Ambient dimension n >= 2.
class Dimension {
  public:
    explicit Dimension(int n);
    int value() const { return n_; }

  private:
    int n_;
};

// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2), cached per (n, precision).
Scalar sphere_area(Dimension n);

// Volume of the n-ball of radius r: |S^{n-1}| r^n / n.
Scalar ball_volume(Dimension n, const Scalar& r);

// Dimension of degree-k spherical harmonics on S^{n-1}.
long long harmonic_multiplicity(Dimension n, int k);

// k(n+k-2), the Laplace eigenvalue of degree-k spherical harmonics.
Scalar sphere_laplace_eigenvalue(Dimension n, int k);

enum class CrossSectionKind { sphere, torus, user_list };

struct CrossSectionEntry {
    Scalar eigenvalue;
    long long multiplicity;
};

// Distinct Laplace eigenvalues of a closed cross-section, sorted ascending.
struct CrossSectionSpectrum {
    CrossSectionKind kind;
    int intrinsic_dim = 0;  // m for S^m / T^m; 0 for user lists
    Scalar radius;          // scale factor; eigenvalues carry 1/r^2
    std::vector<CrossSectionEntry> entries;
};

// First `count` distinct eigenvalues of S^m(r) or of the flat torus
// (R^m / 2 pi Z^m) scaled by r, with multiplicities.
CrossSectionSpectrum cross_section_spectrum(CrossSectionKind kind, int m, const Scalar& r,
                                            int count);

// Caller-supplied spectrum; validated sorted with positive multiplicities.
CrossSectionSpectrum user_cross_section(std::vector<CrossSectionEntry> entries);

}  // namespace steklov
