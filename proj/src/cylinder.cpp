// SPDX-License-Identifier: Apache-2.0
#include "steklov/cylinder.hpp"

#include <algorithm>
#include <stdexcept>

namespace steklov {

CylinderDomain::CylinderDomain(Scalar L, CrossSectionSpectrum cs)
    : half_length(std::move(L)), cross_section(std::move(cs)) {
    if (half_length <= 0) throw std::domain_error("cylinder half-length must be positive");
    if (cross_section.entries.empty()) throw std::domain_error("empty cross-section spectrum");
}

Scalar cylinder_family_value(ProblemKind kind, CylinderFamily family, const Scalar& L,
                             const Scalar& c) {
    if (L <= 0) throw std::domain_error("half-length must be positive");
    switch (family) {
        case CylinderFamily::poly1:
            return (kind == ProblemKind::type1) ? Scalar(0) : 1 / L;
        case CylinderFamily::poly2:
            return (kind == ProblemKind::type1) ? 3 / pow_int(L, 3) : 3 / L;
        default:
            break;
    }
    if (c <= 0) throw std::domain_error("exponential families need c > 0");
    const Scalar E = exp(-2 * L * c);
    const Scalar lead = (kind == ProblemKind::type1) ? 2 * pow_int(c, 3) : 2 * c;
    if (kind == ProblemKind::type1) {
        if (family == CylinderFamily::odd_k)
            return lead * pow_int(1 + E, 2) / (1 - 4 * L * c * E - E * E);
        return lead * pow_int(1 - E, 2) / (1 + 4 * L * c * E - E * E);
    }
    if (family == CylinderFamily::odd_k)
        return lead * pow_int(1 - E, 2) / (1 - 4 * L * c * E - E * E);
    return lead * pow_int(1 + E, 2) / (1 + 4 * L * c * E - E * E);
}

namespace {

std::array<Scalar, 4> axial_coefficients(ProblemKind kind, CylinderFamily family, const Scalar& L,
                                         const Scalar& c) {
    const Scalar zero(0), one(1);
    if (family == CylinderFamily::poly1)
        return (kind == ProblemKind::type1) ? std::array<Scalar, 4>{one, zero, zero, zero}
                                            : std::array<Scalar, 4>{-L * L, zero, one, zero};
    if (family == CylinderFamily::poly2)
        return (kind == ProblemKind::type1)
                   ? std::array<Scalar, 4>{zero, -3 * L * L, zero, one}
                   : std::array<Scalar, 4>{zero, -L * L, zero, one};

    const Scalar e2 = exp(2 * L * c);
    if (kind == ProblemKind::type1) {
        const Scalar P = (1 + c * L) * e2;
        if (family == CylinderFamily::odd_k) {
            const Scalar d1 = (c * L - 1 - P) / (c * (e2 + 1));
            return {d1, one, -d1, one};
        }
        const Scalar d1 = (c * L - 1 + P) / (c * (e2 - 1));
        return {d1, -one, d1, one};
    }
    if (family == CylinderFamily::odd_k) {
        const Scalar d1 = -L * (e2 + 1) / (e2 - 1);
        return {d1, one, -d1, one};
    }
    const Scalar d1 = L * (e2 - 1) / (e2 + 1);
    return {d1, -one, d1, one};
}

}  // namespace

CylinderSpectrum cylinder_spectrum(ProblemKind kind, const CylinderDomain& dom, int count) {
    if (count < 1) throw std::domain_error("count must be >= 1");
    const Scalar& L = dom.half_length;

    CylinderSpectrum out;
    Scalar last_c(0);
    for (std::size_t mode = 0; mode < dom.cross_section.entries.size(); ++mode) {
        const auto& cs = dom.cross_section.entries[mode];
        const long long mult = cs.multiplicity;
        if (cs.eigenvalue == 0) {
            for (const auto family : {CylinderFamily::poly1, CylinderFamily::poly2}) {
                CylinderEntry e{cylinder_family_value(kind, family, L, Scalar(0)),
                                static_cast<int>(mode),
                                family,
                                mult,
                                Scalar(0),
                                axial_coefficients(kind, family, L, Scalar(0))};
                out.entries.push_back(std::move(e));
            }
            continue;
        }
        const Scalar c = sqrt(cs.eigenvalue);
        last_c = c;
        for (const auto family : {CylinderFamily::odd_k, CylinderFamily::even_k}) {
            CylinderEntry e{cylinder_family_value(kind, family, L, c),
                            static_cast<int>(mode),
                            family,
                            mult,
                            c,
                            axial_coefficients(kind, family, L, c)};
            out.entries.push_back(std::move(e));
        }
    }

    std::sort(out.entries.begin(), out.entries.end(),
              [](const CylinderEntry& a, const CylinderEntry& b) {
                  if (a.value != b.value) return a.value < b.value;
                  if (a.mode != b.mode) return a.mode < b.mode;
                  return static_cast<int>(a.family) < static_cast<int>(b.family);
              });
    {
        long long seen = 0;
        std::size_t keep = 0;
        while (keep < out.entries.size() && seen < count) seen += out.entries[keep++].multiplicity;
        out.entries.resize(keep);
    }

    // completeness frontier: modes beyond the provided spectrum have larger c,
    // so their values exceed the slowest family at the last provided mode
    long long total = 0;
    for (const auto& e : out.entries) total += e.multiplicity;
    if (!out.entries.empty() && last_c > 0) {
        const Scalar frontier =
            std::min(cylinder_family_value(kind, CylinderFamily::even_k, L, last_c),
                     cylinder_family_value(kind, CylinderFamily::odd_k, L, last_c));
        if (out.entries.back().value > frontier || total < count)
            out.truncated_cross_section = true;
    } else if (total < count) {
        out.truncated_cross_section = true;
    }
    return out;
}

Scalar AxialFunction::operator()(const Scalar& s, int m) const {
    if (m < 0 || m > 3) throw std::domain_error("derivative order must be 0..3");
    if (!exponential) {
        // polynomial basis {1, s, s^2, s^3}
        Scalar total(0);
        for (int j = m; j < 4; ++j) {
            long fall = 1;
            for (int i = 0; i < m; ++i) fall *= j - i;
            total += coeffs[j] * fall * pow_int(s, j - m);
        }
        return total;
    }
    const Scalar ep = exp(c * s);
    const Scalar em = 1 / ep;
    if (m == 0) return coeffs[0] * ep + coeffs[1] * s * ep + coeffs[2] * em + coeffs[3] * s * em;
    const Scalar cp = pow_int(c, m);
    const Scalar cp1 = pow_int(c, m - 1);
    const Scalar cmns = pow_int(-c, m);
    const Scalar cmns1 = pow_int(-c, m - 1);
    return coeffs[0] * cp * ep + coeffs[1] * cp1 * (c * s + m) * ep + coeffs[2] * cmns * em +
           coeffs[3] * cmns1 * (-c * s + m) * em;
}

AxialFunction cylinder_eigenfunction(const CylinderEntry& entry, ProblemKind kind,
                                     const Scalar& L) {
    // the entry must come from the matching spectrum computation
    const Scalar expected = cylinder_family_value(kind, entry.family, L, entry.c);
    const Scalar scale = std::max(abs(expected), Scalar(1));
    if (abs(expected - entry.value) > rel_tolerance(10) * scale)
        throw std::domain_error("entry does not belong to this problem/domain");
    AxialFunction f;
    f.exponential = entry.c > 0;
    f.c = entry.c;
    f.coeffs = entry.axial_coeffs;
    return f;
}

std::array<Scalar, 4> cylinder_boundary_residuals(ProblemKind kind, const CylinderEntry& entry,
                                                  const Scalar& L) {
    const Scalar c2 = entry.c * entry.c;
    const Scalar& lam = entry.value;

    // per-basis contributions so the residual can be relativized
    const auto basis_deriv = [&](int j, const Scalar& s, int m) {
        AxialFunction unit;
        unit.exponential = entry.c > 0;
        unit.c = entry.c;
        unit.coeffs = {Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
        unit.coeffs[j] = 1;
        return unit(s, m);
    };

    std::array<Scalar, 4> residuals;
    int row = 0;
    for (const int side : {+1, -1}) {
        const Scalar s0 = side * L;
        Scalar sum_a(0), scale_a(0), sum_b(0), scale_b(0);
        for (int j = 0; j < 4; ++j) {
            Scalar term_a, term_b;
            if (kind == ProblemKind::type1) {
                term_a = side * basis_deriv(j, s0, 1);
                term_b = side * (basis_deriv(j, s0, 3) - c2 * basis_deriv(j, s0, 1)) +
                         lam * basis_deriv(j, s0, 0);
            } else {
                term_a = basis_deriv(j, s0, 0);
                term_b = (basis_deriv(j, s0, 2) - c2 * basis_deriv(j, s0, 0)) -
                         side * lam * basis_deriv(j, s0, 1);
            }
            term_a *= entry.axial_coeffs[j];
            term_b *= entry.axial_coeffs[j];
            sum_a += term_a;
            sum_b += term_b;
            scale_a = std::max(scale_a, abs(term_a));
            scale_b = std::max(scale_b, abs(term_b));
        }
        residuals[row++] = (scale_a > 0) ? abs(sum_a) / scale_a : abs(sum_a);
        residuals[row++] = (scale_b > 0) ? abs(sum_b) / scale_b : abs(sum_b);
    }
    return residuals;
}

std::vector<WeylGapRow> weyl_gap_report(ProblemKind kind, const CylinderDomain& dom, int m_max) {
    if (m_max < 2) throw std::domain_error("need at least two modes");
    if (static_cast<int>(dom.cross_section.entries.size()) <= m_max)
        throw std::domain_error("cross-section spectrum too short for the requested modes");
    std::vector<WeylGapRow> rows;
    for (int mode = 1; mode <= m_max; ++mode) {
        const auto& cs = dom.cross_section.entries[mode];
        if (cs.eigenvalue == 0) continue;  // polynomial families carry no limit claim
        const Scalar c = sqrt(cs.eigenvalue);
        const Scalar limit = (kind == ProblemKind::type1) ? 2 * pow_int(c, 3) : 2 * c;
        const Scalar g1 =
            abs(cylinder_family_value(kind, CylinderFamily::odd_k, dom.half_length, c) - limit);
        const Scalar g2 =
            abs(cylinder_family_value(kind, CylinderFamily::even_k, dom.half_length, c) - limit);
        rows.push_back({mode, limit, std::max(g1, g2)});
    }
    return rows;
}

std::vector<ExistenceRow> existence_scan(ProblemKind kind, const Scalar& c,
                                         const Scalar& cross_section_measure,
                                         const std::vector<Scalar>& L_grid) {
    if (L_grid.empty()) throw std::domain_error("empty L grid");
    for (std::size_t i = 0; i < L_grid.size(); ++i) {
        if (L_grid[i] <= 0) throw std::domain_error("L grid must be positive");
        if (i > 0 && L_grid[i] >= L_grid[i - 1])
            throw std::domain_error("L grid must be decreasing");
    }
    std::vector<ExistenceRow> rows;
    for (const Scalar& L : L_grid) {
        const Scalar value = (kind == ProblemKind::type1)
                                 ? cylinder_family_value(kind, CylinderFamily::even_k, L, c)
                                 : cylinder_family_value(kind, CylinderFamily::poly1, L, c);
        rows.push_back({L, value, 2 * cross_section_measure});
    }
    return rows;
}

}  // namespace steklov
