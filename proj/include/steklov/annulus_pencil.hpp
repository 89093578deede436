// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "steklov/linalg.hpp"
#include "steklov/radial_basis.hpp"

namespace steklov {

// Sampled determinant disagreed with the fitted quadratic.
class integrity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// B_1^n minus the closed ball of radius eps, 0 < eps < 1.
struct AnnulusDomain {
    Dimension n;
    Scalar eps;
    AnnulusDomain(Dimension dim, Scalar inner) : n(dim), eps(std::move(inner)) {
        if (!(eps > 0 && eps < 1)) throw std::domain_error("annulus requires 0 < eps < 1");
    }
};

// type1: du/dnu = 0, d(Delta u)/dnu + xi u = 0 on the boundary.
// type2: u = 0, Delta u = eta du/dnu on the boundary.
enum class ProblemKind { type1, type2 };

// det M(lambda) * sign * eps^scaling_exponent = A lambda^2 + B lambda + C.
struct QuadraticPencil {
    Scalar A;
    Scalar B;
    Scalar C;
    long scaling_exponent;
    int sign;
};

// Rows: the two boundary conditions at r=1 then at r=eps, lambda inserted
// where the eigenvalue enters; columns follow the radial basis order.
Matrix4 boundary_matrix(ProblemKind kind, const AnnulusDomain& dom, int k, const Scalar& lambda);

QuadraticPencil extract_pencil(ProblemKind kind, const AnnulusDomain& dom, int k);

struct PencilRoots {
    struct Root {
        Scalar value;
        int branch;  // 1 = smaller root
    };
    std::vector<Root> roots;
    bool complex_pair = false;
    bool branch_at_infinity = false;  // leading coefficient vanished
};

PencilRoots solve_pencil(const QuadraticPencil& p);

enum class Provenance { pencil, closed_form, oracle };

struct SpectrumEntry {
    Scalar value;
    int k;
    int branch;
    long long multiplicity;
    Provenance provenance;
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;
    bool tail_warning = false;   // largest kept value may compete with degree k_max+1
    bool nonreal_flag = false;   // some pencil produced a complex pair
};

SpectrumResult annulus_spectrum(ProblemKind kind, const AnnulusDomain& dom, int k_max, int count,
                                bool positive_only = false);

// Closed-form ball spectra with the radius rescaling folded in.
SpectrumResult ball_spectrum(ProblemKind kind, Dimension n, const Scalar& radius, int k_max,
                             int count);
Scalar ball_eigenvalue(ProblemKind kind, Dimension n, int k, const Scalar& radius);

// Relative residuals of the four boundary conditions for a coefficient vector.
std::array<Scalar, 4> boundary_residuals(ProblemKind kind, const AnnulusDomain& dom, int k,
                                         const Scalar& lambda, const Coeffs& coeffs);

}  // namespace steklov
