// SPDX-License-Identifier: Apache-2.0
#include "steklov/shape_opt.hpp"

#include <stdexcept>

namespace steklov {

Measures annulus_measures(const AnnulusDomain& dom) {
    const int n = dom.n.value();
    const Scalar omega = sphere_area(dom.n);
    return {omega * (1 - pow_int(dom.eps, n)) / n, omega * (1 + pow_int(dom.eps, n - 1))};
}

NormalizedValue normalized_eigenvalue(ProblemKind kind, const Scalar& raw, const Measures& m,
                                      Dimension n, Normalization norm, const Scalar& alpha) {
    if (m.volume <= 0 || m.boundary_area <= 0)
        throw std::domain_error("measures must be positive");
    const long num = (kind == ProblemKind::type1) ? 3 : 1;
    const Scalar area_factor =
        pow_scalar(m.boundary_area, Scalar(num) / (n.value() - 1));
    const Scalar volume_factor = pow_scalar(m.volume, Scalar(num) / n.value());

    NormalizedValue out{raw, norm, alpha, Scalar(0)};
    switch (norm) {
        case Normalization::boundary_area:
            out.alpha = 1;
            out.value = raw * area_factor;
            break;
        case Normalization::volume:
            out.alpha = 0;
            out.value = raw * volume_factor;
            break;
        case Normalization::mixed:
            out.value =
                raw * pow_scalar(area_factor, alpha) * pow_scalar(volume_factor, 1 - alpha);
            break;
    }
    return out;
}

ComparisonVerdict compare_annulus_vs_ball(ProblemKind kind, Dimension n, int k, const Scalar& eps,
                                          bool allow_outside_validated) {
    if (kind == ProblemKind::type1 && k < 1)
        throw std::domain_error("type1 comparisons need k >= 1 (the k=0 eigenvalue is 0)");
    if (kind == ProblemKind::type2 && n.value() < 4)
        throw std::domain_error("type2 comparisons are only meaningful for n >= 4");
    const bool outside = eps > Scalar(1) / 10;
    if (outside && !allow_outside_validated)
        throw std::invalid_argument("eps > 0.1 is outside the validated regime");

    const AnnulusDomain dom(n, eps);
    const PencilRoots roots = solve_pencil(extract_pencil(kind, dom, k));
    if (roots.complex_pair || roots.roots.empty())
        throw std::runtime_error("annulus pencil produced no usable root");
    const Scalar annulus_value = roots.roots.front().value;

    const Measures annulus = annulus_measures(dom);
    const Measures ball{ball_volume(n, Scalar(1)), sphere_area(n)};

    const Scalar a = normalized_eigenvalue(kind, annulus_value, annulus, n,
                                           Normalization::boundary_area)
                         .value;
    const Scalar b = normalized_eigenvalue(kind, ball_eigenvalue(kind, n, k, Scalar(1)), ball, n,
                                           Normalization::boundary_area)
                         .value;

    ComparisonVerdict verdict{a > b ? Verdict::annulus_greater : Verdict::ball_greater, a - b, a,
                              b, outside};
    return verdict;
}

}  // namespace steklov
