// SPDX-License-Identifier: Apache-2.0
#include "steklov/annulus_pencil.hpp"

#include <algorithm>

namespace steklov {

Matrix4 boundary_matrix(ProblemKind kind, const AnnulusDomain& dom, int k, const Scalar& lambda) {
    const RadialFamily fam = radial_family(dom.n, k);
    Matrix4 m;
    for (int j = 0; j < 4; ++j) {
        const RadialState outer = basis_state(fam, j, Scalar(1));
        const RadialState inner = basis_state(fam, j, dom.eps);
        if (kind == ProblemKind::type1) {
            // outward normal is +d/dr at r=1 and -d/dr at r=eps
            m[0][j] = outer.alpha_r;
            m[1][j] = inner.alpha_r;
            m[2][j] = outer.lap_r + lambda * outer.alpha;
            m[3][j] = -inner.lap_r + lambda * inner.alpha;
        } else {
            m[0][j] = outer.alpha;
            m[1][j] = inner.alpha;
            m[2][j] = outer.lap - lambda * outer.alpha_r;
            m[3][j] = inner.lap + lambda * inner.alpha_r;
        }
    }
    return m;
}

QuadraticPencil extract_pencil(ProblemKind kind, const AnnulusDomain& dom, int k) {
    const Scalar d0 = det4(boundary_matrix(kind, dom, k, Scalar(0)));
    const Scalar dp = det4(boundary_matrix(kind, dom, k, Scalar(1)));
    const Scalar dm = det4(boundary_matrix(kind, dom, k, Scalar(-1)));

    QuadraticPencil p;
    const long nk = 2L * dom.n.value() + 2L * k;
    p.scaling_exponent = (kind == ProblemKind::type1) ? nk - 2 : nk - 4;
    p.sign = (kind == ProblemKind::type1) ? 1 : -1;
    const Scalar scale = p.sign * pow_int(dom.eps, p.scaling_exponent);

    p.A = ((dp + dm) / 2 - d0) * scale;
    p.B = ((dp - dm) / 2) * scale;
    p.C = d0 * scale;

    // the determinant must be a quadratic in lambda; probe off the fit points
    const Scalar tol = rel_tolerance(12);
    for (const long probe : {2L, -3L}) {
        const Scalar det = det4(boundary_matrix(kind, dom, k, Scalar(probe))) * scale;
        const Scalar fit = p.A * probe * probe + p.B * probe + p.C;
        const Scalar mag =
            std::max({abs(p.A * probe * probe), abs(p.B * probe), abs(p.C), abs(det)});
        if (mag > 0 && abs(det - fit) > tol * mag)
            throw integrity_error("boundary determinant is not quadratic in the eigenvalue");
    }
    return p;
}

PencilRoots solve_pencil(const QuadraticPencil& p) {
    PencilRoots out;
    if (p.A == 0 && p.B == 0 && p.C == 0)
        throw std::invalid_argument("all-zero pencil has no spectrum");
    if (p.A == 0) {
        out.branch_at_infinity = true;
        if (p.B != 0) out.roots.push_back({-p.C / p.B, 1});
        return out;
    }
    if (p.C == 0) {
        Scalar other = -p.B / p.A;
        if (other >= 0)
            out.roots = {{Scalar(0), 1}, {other, 2}};
        else
            out.roots = {{other, 1}, {Scalar(0), 2}};
        return out;
    }
    const Scalar disc = p.B * p.B - 4 * p.A * p.C;
    if (disc < 0) {
        out.complex_pair = true;
        return out;
    }
    // cancellation-safe split: q = -(B + sign(B) sqrt(disc)) / 2
    const Scalar root = sqrt(disc);
    const Scalar q = (p.B >= 0) ? (-(p.B + root) / 2) : (-(p.B - root) / 2);
    Scalar r1 = q / p.A;
    Scalar r2 = p.C / q;
    if (r1 > r2) std::swap(r1, r2);
    out.roots = {{r1, 1}, {r2, 2}};
    return out;
}

namespace {

// `count` counts eigenvalues with multiplicity; the straddling entry is kept whole.
template <typename Entry>
void truncate_by_multiplicity(std::vector<Entry>& entries, int count) {
    long long seen = 0;
    std::size_t keep = 0;
    while (keep < entries.size() && seen < count) seen += entries[keep++].multiplicity;
    entries.resize(keep);
}

}  // namespace

Scalar ball_eigenvalue(ProblemKind kind, Dimension n, int k, const Scalar& radius) {
    if (radius <= 0) throw std::domain_error("ball radius must be positive");
    if (k < 0) throw std::domain_error("harmonic degree must be >= 0");
    const long nk = n.value() + 2L * k;
    if (kind == ProblemKind::type1) return Scalar(static_cast<long>(k) * k * nk) / pow_int(radius, 3);
    return Scalar(nk) / radius;
}

SpectrumResult annulus_spectrum(ProblemKind kind, const AnnulusDomain& dom, int k_max, int count,
                                bool positive_only) {
    if (k_max < 0 || count < 1) throw std::domain_error("need k_max >= 0 and count >= 1");
    SpectrumResult result;
    for (int k = 0; k <= k_max; ++k) {
        const PencilRoots roots = solve_pencil(extract_pencil(kind, dom, k));
        if (roots.complex_pair) {
            result.nonreal_flag = true;
            continue;
        }
        const long long mult = harmonic_multiplicity(dom.n, k);
        for (const auto& r : roots.roots) {
            if (positive_only && r.value == 0) continue;
            result.entries.push_back({r.value, k, r.branch, mult, Provenance::pencil});
        }
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  if (a.value != b.value) return a.value < b.value;
                  if (a.k != b.k) return a.k < b.k;
                  return a.branch < b.branch;
              });
    truncate_by_multiplicity(result.entries, count);
    if (!result.entries.empty()) {
        const Scalar next_degree = ball_eigenvalue(kind, dom.n, k_max + 1, Scalar(1));
        if (result.entries.back().value > next_degree) result.tail_warning = true;
    }
    return result;
}

SpectrumResult ball_spectrum(ProblemKind kind, Dimension n, const Scalar& radius, int k_max,
                             int count) {
    if (k_max < 0 || count < 1) throw std::domain_error("need k_max >= 0 and count >= 1");
    SpectrumResult result;
    for (int k = 0; k <= k_max; ++k)
        result.entries.push_back({ball_eigenvalue(kind, n, k, radius), k, 1,
                                  harmonic_multiplicity(n, k), Provenance::closed_form});
    std::sort(result.entries.begin(), result.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
    truncate_by_multiplicity(result.entries, count);
    return result;
}

std::array<Scalar, 4> boundary_residuals(ProblemKind kind, const AnnulusDomain& dom, int k,
                                         const Scalar& lambda, const Coeffs& coeffs) {
    const Matrix4 m = boundary_matrix(kind, dom, k, lambda);
    std::array<Scalar, 4> res;
    for (int i = 0; i < 4; ++i) {
        Scalar sum(0);
        Scalar scale(0);
        for (int j = 0; j < 4; ++j) {
            const Scalar term = m[i][j] * coeffs[j];
            sum += term;
            scale = std::max(scale, abs(term));
        }
        res[i] = (scale > 0) ? abs(sum) / scale : abs(sum);
    }
    return res;
}

}  // namespace steklov
