// SPDX-License-Identifier: Apache-2.0
#include "steklov/type3_bound.hpp"

#include <stdexcept>
#include <utility>

namespace steklov {

DomainMeasures::DomainMeasures(Dimension dim, Scalar vol, Scalar area, Scalar tau_param,
                               bool hypotheses)
    : n(dim),
      volume(std::move(vol)),
      boundary_area(std::move(area)),
      tau(std::move(tau_param)),
      star_shaped_mean_convex(hypotheses) {
    if (volume <= 0 || boundary_area <= 0 || tau <= 0)
        throw std::domain_error("measures and tau must be positive");
    // isoperimetric sanity: no domain has less boundary than the equal-volume ball
    const Scalar omega = sphere_area(n);
    const Scalar r_eq = pow_scalar(n.value() * volume / omega, Scalar(1) / n.value());
    const Scalar ball_area = omega * pow_scalar(r_eq, Scalar(n.value() - 1));
    if (boundary_area < ball_area * (1 - rel_tolerance(10)))
        throw std::domain_error("boundary area below the isoperimetric minimum");
}

Scalar first_eigenvalue_bound(const DomainMeasures& m) {
    const int n = m.n.value();
    const Scalar omega = sphere_area(m.n);
    const Scalar shell = Scalar(n - 1) / n * omega *
                         pow_scalar(m.boundary_area / omega, Scalar(n) / (n - 1));
    const Scalar denom = shell + m.volume;
    return n * m.tau * m.volume * m.boundary_area / (denom * denom);
}

Scalar first_eigenvalue_bound_weak(const DomainMeasures& m) {
    const int n = m.n.value();
    const Scalar omega = sphere_area(m.n);
    return pow_scalar(Scalar(n), 1 - Scalar(2) / n) * pow_scalar(omega, Scalar(2) / n) * m.tau *
           pow_scalar(m.volume, 1 - Scalar(2) / n) / m.boundary_area;
}

Scalar ball_first_eigenvalue(Dimension n, const Scalar& r, const Scalar& tau) {
    (void)n;
    if (r <= 0 || tau <= 0) throw std::domain_error("radius and tau must be positive");
    return tau / r;
}

Scalar second_order_lower_bound(const Scalar& tau, const Scalar& p_k) {
    if (p_k < 0) throw std::domain_error("second-order eigenvalue must be >= 0");
    return tau * p_k;
}

}  // namespace steklov
