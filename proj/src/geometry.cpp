// SPDX-License-Identifier: Apache-2.0
#include "steklov/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace steklov {

Dimension::Dimension(int n) : n_(n) {
    if (n < 2) throw std::domain_error("ambient dimension must be >= 2");
}

Scalar sphere_area(Dimension n) {
    static thread_local std::map<std::pair<int, unsigned>, Scalar> cache;
    const auto key = std::make_pair(n.value(), working_digits());
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Scalar half_n = Scalar(n.value()) / 2;
    const Scalar area = 2 * pow_scalar(pi_value(), half_n) / tgamma(half_n);
    cache.emplace(key, area);
    return area;
}

Scalar ball_volume(Dimension n, const Scalar& r) {
    if (r <= 0) throw std::domain_error("ball radius must be positive");
    return sphere_area(n) * pow_int(r, n.value()) / n.value();
}

namespace {

// C(a, b) with C(a, b) = 0 for a < b; exact, overflow-checked.
long long binomial(long a, long b) {
    if (a < b || b < 0) return 0;
    b = std::min(b, a - b);
    long long result = 1;
    for (long i = 1; i <= b; ++i) {
        // multiply first, divide after: result * (a-b+i) is always divisible by i
        long long next;
        if (__builtin_mul_overflow(result, a - b + i, &next))
            throw std::overflow_error("binomial overflow");
        result = next / i;
    }
    return result;
}

}  // namespace

long long harmonic_multiplicity(Dimension n, int k) {
    if (k < 0) throw std::domain_error("harmonic degree must be >= 0");
    const int m = n.value() - 1;
    return binomial(n.value() + k - 1, m) - binomial(n.value() + k - 3, m);
}

Scalar sphere_laplace_eigenvalue(Dimension n, int k) {
    if (k < 0) throw std::domain_error("harmonic degree must be >= 0");
    return Scalar(static_cast<long>(k) * (n.value() + k - 2));
}

namespace {

// Representation counts r_m(N) = #{v in Z^m : |v|^2 = N} for N <= bound.
std::vector<long long> lattice_counts(int m, long bound) {
    std::vector<long long> counts(bound + 1, 0);
    counts[0] = 1;
    for (int dim = 0; dim < m; ++dim) {
        std::vector<long long> next(bound + 1, 0);
        for (long N = 0; N <= bound; ++N) {
            long long total = counts[N];
            for (long j = 1; j * j <= N; ++j) total += 2 * counts[N - j * j];
            next[N] = total;
        }
        counts = std::move(next);
    }
    return counts;
}

}  // namespace

CrossSectionSpectrum cross_section_spectrum(CrossSectionKind kind, int m, const Scalar& r,
                                            int count) {
    if (count < 1) throw std::domain_error("cross-section eigenvalue count must be >= 1");
    if (r <= 0) throw std::domain_error("cross-section radius must be positive");
    if (m < 1) throw std::domain_error("cross-section dimension must be >= 1");

    CrossSectionSpectrum spec;
    spec.kind = kind;
    spec.intrinsic_dim = m;
    spec.radius = r;
    const Scalar r2 = r * r;

    switch (kind) {
        case CrossSectionKind::sphere: {
            for (int k = 0; k < count; ++k) {
                const Scalar lambda = Scalar(static_cast<long>(k) * (m + k - 1)) / r2;
                spec.entries.push_back({lambda, harmonic_multiplicity(Dimension(m + 1), k)});
            }
            break;
        }
        case CrossSectionKind::torus: {
            long bound = std::max<long>(16, static_cast<long>(count) * count);
            while (true) {
                const auto counts = lattice_counts(m, bound);
                spec.entries.clear();
                for (long N = 0; N <= bound && static_cast<int>(spec.entries.size()) < count; ++N)
                    if (counts[N] > 0) spec.entries.push_back({Scalar(N) / r2, counts[N]});
                if (static_cast<int>(spec.entries.size()) == count) break;
                bound *= 2;
            }
            break;
        }
        case CrossSectionKind::user_list:
            throw std::domain_error("user-list spectra are built with user_cross_section");
    }
    return spec;
}

CrossSectionSpectrum user_cross_section(std::vector<CrossSectionEntry> entries) {
    if (entries.empty()) throw std::domain_error("cross-section spectrum must be non-empty");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].eigenvalue < 0) throw std::domain_error("negative Laplace eigenvalue");
        if (entries[i].multiplicity < 1) throw std::domain_error("multiplicity must be >= 1");
        if (i > 0 && entries[i].eigenvalue < entries[i - 1].eigenvalue)
            throw std::domain_error("cross-section eigenvalues must be non-decreasing");
    }
    CrossSectionSpectrum spec;
    spec.kind = CrossSectionKind::user_list;
    spec.radius = 1;
    spec.entries = std::move(entries);
    return spec;
}

}  // namespace steklov
