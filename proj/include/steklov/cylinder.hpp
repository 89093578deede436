// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "steklov/annulus_pencil.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

// [-L, L] x M with the product metric.
struct CylinderDomain {
    Scalar half_length;
    CrossSectionSpectrum cross_section;
    CylinderDomain(Scalar L, CrossSectionSpectrum cs);
};

// poly1/poly2: the polynomial axial solutions attached to zero cross-section
// modes; even_k/odd_k: the exponential families, named by axial parity.
enum class CylinderFamily { poly1, poly2, even_k, odd_k };

struct CylinderEntry {
    Scalar value;
    int mode;  // index into the cross-section spectrum
    CylinderFamily family;
    long long multiplicity;
    Scalar c;  // sqrt of the cross-section eigenvalue
    // axial factor coefficients: {1, s, s^2, s^3} when c = 0,
    // {e^{cs}, s e^{cs}, e^{-cs}, s e^{-cs}} otherwise
    std::array<Scalar, 4> axial_coeffs;
};

struct CylinderSpectrum {
    std::vector<CylinderEntry> entries;
    bool truncated_cross_section = false;  // provided modes may not cover `count`
};

// Closed-form eigenvalue of one family; written through e^{-2Lc} so large Lc
// stays well-scaled.
Scalar cylinder_family_value(ProblemKind kind, CylinderFamily family, const Scalar& L,
                             const Scalar& c);

CylinderSpectrum cylinder_spectrum(ProblemKind kind, const CylinderDomain& dom, int count);

// Axial factor T(s) with derivatives up to order 3 on [-L, L].
struct AxialFunction {
    bool exponential = false;
    Scalar c;
    std::array<Scalar, 4> coeffs;
    Scalar operator()(const Scalar& s, int derivative = 0) const;
};

AxialFunction cylinder_eigenfunction(const CylinderEntry& entry, ProblemKind kind,
                                     const Scalar& L);

// Relative residuals of the four boundary conditions at s = +L and s = -L.
std::array<Scalar, 4> cylinder_boundary_residuals(ProblemKind kind, const CylinderEntry& entry,
                                                  const Scalar& L);

struct WeylGapRow {
    int mode;
    Scalar limit;  // 2 lambda^{3/2} or 2 sqrt(lambda)
    Scalar gap;    // worst family deviation from the limit
};

// Deviation of the exponential families from their large-mode limit,
// mode by mode; super-polynomially decaying for smooth cross-sections.
std::vector<WeylGapRow> weyl_gap_report(ProblemKind kind, const CylinderDomain& dom, int m_max);

struct ExistenceRow {
    Scalar L;
    Scalar value;
    Scalar boundary_area;
};

// Tabulates the family that collapses (type 1) or blows up (type 2) as L
// shrinks while the boundary measure 2|M| stays fixed.
std::vector<ExistenceRow> existence_scan(ProblemKind kind, const Scalar& c,
                                         const Scalar& cross_section_measure,
                                         const std::vector<Scalar>& L_grid);

}  // namespace steklov
