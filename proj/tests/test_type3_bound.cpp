// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "steklov/prng.hpp"
#include "steklov/type3_bound.hpp"
#include "support.hpp"

using namespace steklov;
using steklov::testing::rel_close;

namespace {

DomainMeasures ball_measures(int n, const Scalar& r, const Scalar& tau,
                             const Scalar& area_factor = Scalar(1)) {
    const Dimension dim(n);
    return DomainMeasures(dim, ball_volume(dim, r),
                          sphere_area(dim) * pow_int(r, n - 1) * area_factor, tau, true);
}

}  // namespace

TEST_SUITE("type3_bound") {
    TEST_CASE("ball collapses the sharp bound to tau/r") {
        for (int n = 2; n <= 8; ++n)
            for (const char* rs : {"0.5", "1", "2"})
                for (const char* ts : {"1", "5"}) {
                    const Scalar r(rs), tau(ts);
                    const Scalar bound = first_eigenvalue_bound(ball_measures(n, r, tau));
                    CHECK(rel_close(bound, tau / r, rel_tolerance(15)));
                    CHECK(rel_close(bound, ball_first_eigenvalue(Dimension(n), r, tau),
                                    rel_tolerance(15)));
                }
    }

    TEST_CASE("weak bound dominates the sharp bound") {
        for (int n = 2; n <= 6; ++n) {
            SplitMix64 rng(1000 + static_cast<std::uint64_t>(n));
            for (int i = 0; i < 100; ++i) {
                const Scalar r = rng.uniform(Scalar("0.5"), Scalar(2));
                const Scalar factor = 1 + rng.uniform() * 2;
                const Scalar tau = rng.uniform(Scalar("0.1"), Scalar(10));
                const auto m = ball_measures(n, r, tau, factor);
                CHECK(first_eigenvalue_bound_weak(m) >= first_eigenvalue_bound(m));
            }
            // equality exactly on balls, strict inequality off them
            const auto ball = ball_measures(n, Scalar(1), Scalar(1));
            CHECK(rel_close(first_eigenvalue_bound_weak(ball), first_eigenvalue_bound(ball),
                            rel_tolerance(15)));
            const auto fat = ball_measures(n, Scalar(1), Scalar(1), Scalar(3) / 2);
            CHECK(first_eigenvalue_bound_weak(fat) >
                  first_eigenvalue_bound(fat) * (1 + rel_tolerance(15)));
        }
    }

    TEST_CASE("doubled-area reference value") {
        // V = |B^3_1|, A = 2 |S^2|: the bound reduces to 18 / (33 + 8 sqrt 2)
        const Scalar pi = pi_value();
        const DomainMeasures m(Dimension(3), 4 * pi / 3, 8 * pi, Scalar(1), true);
        const Scalar expected = 18 / (33 + 8 * sqrt(Scalar(2)));
        CHECK(rel_close(first_eigenvalue_bound(m), expected, rel_tolerance(10)));
        CHECK(rel_close(first_eigenvalue_bound_weak(m), Scalar(1) / 2, rel_tolerance(10)));
        CHECK(first_eigenvalue_bound_weak(m) >= first_eigenvalue_bound(m));
    }

    TEST_CASE("monotonicity in tau and boundary area") {
        Scalar prev(0);
        for (int t = 1; t <= 5; ++t) {
            const Scalar bound = first_eigenvalue_bound(ball_measures(3, Scalar(1), Scalar(t)));
            CHECK(bound > prev);
            prev = bound;
        }
        prev = Scalar(-1);
        for (const char* fs : {"1", "1.2", "1.5", "2", "3"}) {
            const Scalar bound =
                first_eigenvalue_bound(ball_measures(4, Scalar(1), Scalar(1), Scalar(fs)));
            if (prev >= 0) CHECK(bound < prev);
            prev = bound;
        }
    }

    TEST_CASE("ball first eigenvalue and the second-order relation") {
        CHECK(rel_close(ball_first_eigenvalue(Dimension(3), Scalar(1), Scalar(3)), Scalar(3),
                        rel_tolerance(5)));
        CHECK(rel_close(ball_first_eigenvalue(Dimension(5), Scalar(2), Scalar(1)),
                        Scalar(1) / 2, rel_tolerance(5)));
        CHECK(second_order_lower_bound(Scalar(1), Scalar(0)) == 0);
        CHECK(rel_close(second_order_lower_bound(Scalar(3), Scalar("0.4")), Scalar("1.2"),
                        rel_tolerance(5)));
        // equality chain on the unit ball: tau * p_1 = tau / r = first eigenvalue
        const Scalar tau(2);
        CHECK(rel_close(second_order_lower_bound(tau, Scalar(1)),
                        ball_first_eigenvalue(Dimension(3), Scalar(1), tau), rel_tolerance(5)));
        // the weak bound with tau = 1 evaluated on a ball returns p_1 = 1/r
        for (int n : {2, 3, 5})
            for (const char* rs : {"0.5", "1", "2"}) {
                const Scalar r(rs);
                CHECK(rel_close(first_eigenvalue_bound_weak(ball_measures(n, r, Scalar(1))),
                                1 / r, rel_tolerance(15)));
            }
    }

    TEST_CASE("measure validation") {
        CHECK_THROWS_AS(DomainMeasures(Dimension(3), Scalar(0), Scalar(1), Scalar(1), true),
                        std::domain_error);
        CHECK_THROWS_AS(DomainMeasures(Dimension(3), Scalar(1), Scalar(-1), Scalar(1), true),
                        std::domain_error);
        CHECK_THROWS_AS(DomainMeasures(Dimension(3), Scalar(1), Scalar(1), Scalar(0), true),
                        std::domain_error);
        // area below the equal-volume ball is impossible
        const Scalar pi = pi_value();
        CHECK_THROWS_AS(DomainMeasures(Dimension(3), 4 * pi / 3, 2 * pi, Scalar(1), true),
                        std::domain_error);
    }
}
