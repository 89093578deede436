// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <vector>

#include "steklov/annulus_pencil.hpp"

namespace steklov::testing {

inline bool rel_close(const Scalar& a, const Scalar& b, const Scalar& tol) {
    const Scalar scale = std::max(abs(a), abs(b));
    if (scale == 0) return true;
    return abs(a - b) <= tol * scale;
}

// ------------------------------------------------------------------------
// Closed-form pencil coefficients, coded from the printed polynomial
// displays; kept independent of extract_pencil's sampling path.

struct ClosedPencil {
    Scalar A, B, C;
};

inline ClosedPencil type1_generic_closed(long n, long k, const Scalar& e) {
    const long s = n + 2 * k, m = n + k - 2;
    auto E = [&](long p) { return pow_int(e, p); };
    ClosedPencil p;
    p.A = 4 * E(3) - (s - 2) * (s - 2) * E(s - 1) + 2 * s * (s - 4) * E(s + 1) -
          (s - 2) * (s - 2) * E(s + 3) + 4 * E(2 * s - 1);
    p.B = Scalar(-4 * (s - 4) * m * m) - 4 * k * k * s * E(3) -
          4 * k * s * (s - 4) * m * E(s - 2) -
          4 * (s - 2) * (s - 2) * ((k + 1) * n + k * k - 2 * k - 4) * E(s - 1) +
          4 * (s - 2) * (s - 2) * ((k + 1) * n + k * k - 2 * k - 4) * E(s) +
          4 * k * s * (s - 4) * m * E(s + 1) + 4 * k * k * s * E(2 * s - 4) +
          4 * (s - 4) * m * m * E(2 * s - 1);
    p.C = 4 * k * k * s * (s - 4) * m * m * (1 - 2 * E(s - 2) + E(2 * s - 4));
    return p;
}

inline ClosedPencil type1_log20_closed(const Scalar& e) {
    const Scalar L = log(e);
    return {-e + 4 * pow_int(e, 3) * L * L + 2 * pow_int(e, 3) - pow_int(e, 5),
            8 * (1 + e - e * e - pow_int(e, 3)), Scalar(0)};
}

inline ClosedPencil type1_log40_closed(const Scalar& e) {
    const Scalar L = log(e);
    return {pow_int(e, 3) * L + pow_int(e, 3) - 2 * pow_int(e, 5) - pow_int(e, 7) * L +
                pow_int(e, 7),
            4 * (1 + pow_int(e, 3) - pow_int(e, 4) - pow_int(e, 7)), Scalar(0)};
}

inline ClosedPencil type1_log21_closed(const Scalar& e) {
    const Scalar L = log(e);
    ClosedPencil p;
    p.A = pow_int(e, 3) * L + pow_int(e, 3) - 2 * pow_int(e, 5) - pow_int(e, 7) * L +
          pow_int(e, 7);
    p.B = 1 + 4 * e * e - 4 * pow_int(e, 3) * L + 5 * pow_int(e, 3) - 4 * pow_int(e, 4) * L -
          5 * pow_int(e, 4) - 4 * pow_int(e, 5) - pow_int(e, 7);
    p.C = 4 * (-1 + 2 * e * e - pow_int(e, 4));
    return p;
}

inline ClosedPencil type2_generic_closed(long n, long k, const Scalar& e) {
    const long s = n + 2 * k;
    auto E = [&](long p) { return pow_int(e, p); };
    ClosedPencil p;
    p.A = 4 * e - (s - 2) * (s - 2) * E(s - 3) + 2 * s * (s - 4) * E(s - 1) -
          (s - 2) * (s - 2) * E(s + 1) + 4 * E(2 * s - 3);
    p.B = Scalar(-4 * (s - 4)) - 4 * s * e + 4 * (s - 2) * (s - 2) * E(s - 3) +
          4 * s * (s - 4) * E(s - 2) - 4 * s * (s - 4) * E(s - 1) -
          4 * (s - 2) * (s - 2) * E(s) + 4 * s * E(2 * s - 4) + 4 * (s - 4) * E(2 * s - 3);
    p.C = 4 * s * (s - 4) * (1 - 2 * E(s - 2) + E(2 * s - 4));
    return p;
}

inline ClosedPencil type2_n3k0_closed(const Scalar& e) {
    return {pow_int(e - 1, 4), 8 * pow_int(e - 1, 3), 12 * pow_int(e - 1, 2)};
}

inline ClosedPencil type2_log20_closed(const Scalar& e) {
    const Scalar L = log(e);
    ClosedPencil p;
    p.A = 1 - 4 * e * e * L * L - 2 * e * e + pow_int(e, 4);
    p.B = -4 - 8 * e * L * L - 8 * e * L - 4 * e + 8 * e * e * L * L - 8 * e * e * L +
          4 * e * e + 4 * pow_int(e, 3);
    p.C = 16 * e * L * L;
    return p;
}

inline ClosedPencil type2_threshold_closed(const Scalar& e) {
    const Scalar L = log(e);
    ClosedPencil p;
    p.A = e * L + e - 2 * pow_int(e, 3) - pow_int(e, 5) * L + pow_int(e, 5);
    p.B = 1 - 4 * e * L - 3 * e - 4 * e * e + 4 * pow_int(e, 3) - 4 * pow_int(e, 4) * L +
          3 * pow_int(e, 4) - pow_int(e, 5);
    p.C = -4 + 8 * e * e - 4 * pow_int(e, 4);
    return p;
}

// proportionality check through cross products; tolerant of an overall factor
inline Scalar pencil_mismatch(const QuadraticPencil& p, const ClosedPencil& q) {
    const Scalar x1 = p.A * q.B - q.A * p.B;
    const Scalar x2 = p.B * q.C - q.B * p.C;
    const Scalar x3 = p.A * q.C - q.A * p.C;
    const Scalar scale = std::max(
        {abs(p.A * q.B), abs(q.A * p.B), abs(p.B * q.C), abs(q.B * p.C), abs(p.A * q.C),
         abs(q.A * p.C), Scalar(1)});
    return std::max({abs(x1), abs(x2), abs(x3)}) / scale;
}

// ------------------------------------------------------------------------
// Brute-force dimension of harmonic homogeneous polynomials: exact rational
// linear algebra on monomial coefficients of the Laplacian.

inline void enumerate_monomials(int n, int degree, std::vector<int>& current,
                                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == n - 1) {
        int used = 0;
        for (int e : current) used += e;
        current.push_back(degree - used);
        out.push_back(current);
        current.pop_back();
        return;
    }
    int used = 0;
    for (int e : current) used += e;
    for (int e = 0; e + used <= degree; ++e) {
        current.push_back(e);
        enumerate_monomials(n, degree, current, out);
        current.pop_back();
    }
}

inline std::vector<std::vector<int>> monomials(int n, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    enumerate_monomials(n, degree, current, out);
    return out;
}

inline long long harmonic_dimension_bruteforce(int n, int k) {
    const auto cols = monomials(n, k);
    if (k < 2) return static_cast<long long>(cols.size());
    const auto rows = monomials(n, k - 2);
    std::map<std::vector<int>, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);

    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i) {
            if (cols[j][i] < 2) continue;
            auto target = cols[j];
            target[i] -= 2;
            m[row_index[target]][j] = Rational(cols[j][i]) * (cols[j][i] - 1);
        }

    // exact Gaussian elimination, rank = image dimension of the Laplacian
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols.size(); ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<long long>(cols.size() - rank);
}

}  // namespace steklov::testing
