// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>

#include "ptrmt/analytic.hpp"
#include "ptrmt/montecarlo.hpp"
#include "ptrmt/quadrature.hpp"
#include "ptrmt/rng.hpp"
#include "ptrmt/special.hpp"
#include "oracles.hpp"

using namespace ptrmt;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(-1) == 1.0);
    CHECK(double_factorial(0) == 1.0);
    CHECK(double_factorial(5) == 15.0);
    CHECK(double_factorial(9) == 945.0);
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
    // log-gamma branch agrees with the plain recursion across the switchover
    for (int k = 15; k <= 40; ++k) {
        CHECK(double_factorial(k) ==
              doctest::Approx(oracles::double_factorial_naive(k)).epsilon(1e-13));
    }
}

TEST_CASE("regularized incomplete gamma") {
    // P(1/2, x) = erf(sqrt(x)); P(1, x) = 1 - exp(-x)
    for (double x : {0.01, 0.3, 1.0, 2.5, 10.0, 40.0}) {
        CHECK(gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-12));
        CHECK(gamma_p(1.0, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
    }
    CHECK(gamma_p(3.0, 0.0) == 0.0);
}

TEST_CASE("unbounded normalization constant") {
    SUBCASE("pinned values") {
        CHECK(norm_constant_unbounded(1.0, {0, 0, 0}) ==
              doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-13));
        CHECK(norm_constant_unbounded(1.0, {0, 0, 1}) ==
              doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-13));
        CHECK(norm_constant_unbounded(2.0, {1, 1, 1}) ==
              doctest::Approx(64.0 / (kPi * kPi)).epsilon(1e-13));
    }
    SUBCASE("constraint violations rejected") {
        CHECK_THROWS_AS(norm_constant_unbounded(1.0, {1, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(norm_constant_unbounded(1.0, {0, 2, 1}), std::invalid_argument);
        CHECK_THROWS_AS(norm_constant_unbounded(-1.0, {0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(norm_constant_unbounded(1.0, {-1, 0, 0}), std::invalid_argument);
    }
    SUBCASE("product of 1D Gaussian-moment quadratures is 1/A") {
        // Independent route: A * prod_i integral x^2k_i exp(-alpha x^2) dx = 1.
        const ExponentTriple triples[] = {{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 2}, {2, 3, 5}};
        for (const auto& t : triples) {
            for (double alpha : {0.5, 1.0, 2.0}) {
                const int ks[4] = {t.l, t.m - t.l, t.m - t.n, t.n};
                double product = 1.0;
                for (int k : ks) {
                    const auto r = integrate_1d(
                        [k, alpha](double x) {
                            return ipow(x * x, k) * std::exp(-alpha * x * x);
                        },
                        -kInf, kInf, 1e-12);
                    product *= r.value;
                }
                CHECK(norm_constant_unbounded(alpha, t) * product ==
                      doctest::Approx(1.0).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("unbounded matrix-element density") {
    SUBCASE("origin value equals the normalization constant for l=n=m=0") {
        CHECK(pdf_unbounded(MatrixParams(0, 0, 0, 0), 1.0, {0, 0, 0}) ==
              doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-13));
    }
    SUBCASE("zero of the power law") {
        CHECK(pdf_unbounded(MatrixParams(0, 1, 1, 1), 1.0, {1, 0, 1}) == 0.0);
    }
    SUBCASE("sign-flip invariance (even exponents)") {
        RngStream rng(21, 0);
        for (int i = 0; i < 200; ++i) {
            const double x1 = 2.0 * rng.uniform() - 1.0;
            const double y1 = 2.0 * rng.uniform() - 1.0;
            const double x2 = 2.0 * rng.uniform() - 1.0;
            const double y2 = 2.0 * rng.uniform() - 1.0;
            const ExponentTriple t{1, 0, 2};
            const double base = pdf_unbounded(MatrixParams(x1, y1, x2, y2), 1.0, t);
            CHECK(pdf_unbounded(MatrixParams(-x1, y1, x2, y2), 1.0, t) == base);
            CHECK(pdf_unbounded(MatrixParams(x1, -y1, x2, y2), 1.0, t) == base);
            CHECK(pdf_unbounded(MatrixParams(x1, y1, -x2, y2), 1.0, t) == base);
            CHECK(pdf_unbounded(MatrixParams(x1, y1, x2, -y2), 1.0, t) == base);
        }
    }
    SUBCASE("Monte Carlo normalization") {
        RngStream rng(22, 0);
        const ExponentTriple t{1, 0, 1};
        const auto mc = mc_integrate_gaussian_r4(
            [&t](const MatrixParams& p) { return pdf_unbounded(p, 1.0, t); }, 1.0,
            200000, rng);
        CHECK(std::fabs(mc.estimate - 1.0) <= 3.0 * mc.std_error);
    }
}

TEST_CASE("bounded normalization constant") {
    SUBCASE("all-ones exponents equal the orthant ball volume reciprocal") {
        CHECK(norm_constant_bounded({0, 0, 0}) ==
              doctest::Approx(32.0 / (kPi * kPi)).epsilon(1e-13));
    }
    SUBCASE("gamma evaluation example") {
        // alphas (1, 3, 3, 1): A = 16 Gamma(5) / (Gamma(1/2)^2 Gamma(3/2)^2)
        CHECK(norm_constant_bounded({0, 2, 0}) ==
              doctest::Approx(1536.0 / (kPi * kPi)).epsilon(1e-13));
    }
    SUBCASE("constraint violations rejected") {
        CHECK_THROWS_AS(norm_constant_bounded({-1.5, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(norm_constant_bounded({0, -1.2, 0}), std::invalid_argument);
        CHECK_THROWS_AS(norm_constant_bounded({2.5, 1.0, 0}), std::invalid_argument);
    }
    SUBCASE("Monte Carlo rejection-integration oracle") {
        const BoundedExponents specs[] = {
            {0, 0, 0}, {0.5, 2.0, 1.0}, {1.0, 3.0, 2.0}, {0.25, 1.5, 0.75}};
        for (const auto& b : specs) {
            RngStream rng(23, 0);
            const auto mc = mc_integrate_unit_cube4(
                [&b](const MatrixParams& p) { return pdf_bounded(p, b); }, 400000, rng);
            CHECK(std::fabs(mc.estimate - 1.0) <= 3.0 * mc.std_error);
        }
    }
}

TEST_CASE("bounded matrix-element density") {
    SUBCASE("outside the unit ball") {
        CHECK(pdf_bounded(MatrixParams(0.9, 0.9, 0.9, 0.9), {0, 1, 0}) == 0.0);
    }
    SUBCASE("uniform inside for all-ones exponents") {
        CHECK(pdf_bounded(MatrixParams(0.3, 0.1, 0.2, 0.4), {0, 0, 0}) ==
              doctest::Approx(32.0 / (kPi * kPi)).epsilon(1e-13));
    }
    SUBCASE("negative coordinate is outside the orthant support") {
        CHECK(pdf_bounded(MatrixParams(-0.1, 0.2, 0.2, 0.2), {0, 1, 0}) == 0.0);
        CHECK(pdf_bounded(MatrixParams(0.1, -0.2, 0.2, 0.2), {0, 1, 0}) == 0.0);
    }
    SUBCASE("zero coordinate with zero exponent contributes factor one") {
        CHECK(pdf_bounded(MatrixParams(0, 0, 0, 0), {0, 0, 0}) ==
              doctest::Approx(32.0 / (kPi * kPi)).epsilon(1e-13));
    }
    SUBCASE("boundary of the ball counts as inside") {
        CHECK(pdf_bounded(MatrixParams(1, 0, 0, 0), {0, 0, 0}) ==
              doctest::Approx(32.0 / (kPi * kPi)).epsilon(1e-13));
    }
}

TEST_CASE("unbounded spacing density") {
    SUBCASE("vanishes at zero") {
        CHECK(spacing_pdf_unbounded(0.0, 1.0, {0, 0, 0}) == 0.0);
        CHECK(spacing_pdf_unbounded(0.0, 2.0, {1, 1, 2}) == 0.0);
    }
    SUBCASE("pinned value at sigma = 2, q = 1") {
        // 2 e^{-1} / sqrt(pi)
        CHECK(spacing_pdf_unbounded(2.0, 1.0, {0, 0, 0}) ==
              doctest::Approx(2.0 * std::exp(-1.0) / std::sqrt(kPi)).epsilon(1e-13));
        CHECK(spacing_pdf_unbounded(2.0, 1.0, {0, 0, 0}) ==
              doctest::Approx(0.41511).epsilon(1e-4));
    }
    SUBCASE("negative sigma rejected") {
        CHECK_THROWS_AS(spacing_pdf_unbounded(-0.1, 1.0, {0, 0, 0}),
                        std::invalid_argument);
    }
    SUBCASE("normalization by quadrature across a spec grid") {
        const ExponentTriple triples[] = {{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 2}};
        for (const auto& t : triples) {
            for (double alpha : {0.5, 1.0, 2.0}) {
                const auto r = integrate_1d(
                    [&](double s) { return spacing_pdf_unbounded(s, alpha, t); }, 0.0,
                    kInf, 1e-10);
                CHECK(std::fabs(r.value - 1.0) <= 1e-8);
            }
        }
    }
    SUBCASE("small-sigma power law with the normalized prefactor") {
        const ExponentTriple triples[] = {{0, 0, 0}, {1, 0, 1}, {1, 1, 2}};
        for (const auto& t : triples) {
            const double alpha = 1.0;
            const double q = 2.0 * t.m - t.l + 1.0;
            const double c = spacing_prefactor(alpha, t);
            const double sigma = 1e-4;
            const double value = spacing_pdf_unbounded(sigma, alpha, t);
            CHECK(std::fabs(value / std::pow(sigma, 2.0 * q) - c) <= 1e-6 * c);
        }
    }
}

TEST_CASE("printed-prefactor cross-check") {
    // q = 2m - l + 1 in {1, 2}: printed and normalized prefactors agree.
    const ExponentTriple q1{0, 0, 0};       // q = 1
    const ExponentTriple q2{1, 1, 1};       // q = 2
    for (double alpha : {0.5, 1.0, 2.0}) {
        CHECK(spacing_prefactor_paper(alpha, q1) ==
              doctest::Approx(spacing_prefactor(alpha, q1)).epsilon(1e-12));
        CHECK(spacing_prefactor_paper(alpha, q2) ==
              doctest::Approx(spacing_prefactor(alpha, q2)).epsilon(1e-12));
    }
    // q in {3, 4, 5}: the printed form misses exactly (2q-3)!!.
    const ExponentTriple q3{0, 0, 1};
    const ExponentTriple q4{1, 0, 2};
    const ExponentTriple q5{0, 0, 2};
    CHECK(2 * q3.m - q3.l + 1 == 3);
    CHECK(2 * q4.m - q4.l + 1 == 4);
    CHECK(2 * q5.m - q5.l + 1 == 5);
    for (const auto& t : {q3, q4, q5}) {
        const int q = 2 * t.m - t.l + 1;
        const double ratio = spacing_prefactor_paper(1.0, t) / spacing_prefactor(1.0, t);
        CHECK(ratio == doctest::Approx(oracles::double_factorial_naive(2 * q - 3))
                           .epsilon(1e-12));
        CHECK(spacing_prefactor_ratio(t) ==
              doctest::Approx(oracles::double_factorial_naive(2 * q - 3)).epsilon(1e-12));
    }
}

TEST_CASE("bounded spacing density") {
    SUBCASE("pinned all-ones value at sigma = 1") {
        CHECK(spacing_pdf_bounded(1.0, {0, 0, 0}) ==
              doctest::Approx(std::sqrt(3.0) / kPi).epsilon(1e-13));
        CHECK(spacing_pdf_bounded(1.0, {0, 0, 0}) ==
              doctest::Approx(0.55133).epsilon(1e-4));
    }
    SUBCASE("vanishes at the support boundary") {
        CHECK(spacing_pdf_bounded(2.0, {0, 0, 0}) == 0.0);
        CHECK(spacing_pdf_bounded(2.5, {0, 0, 0}) == 0.0);
        CHECK(spacing_pdf_bounded(-0.5, {0, 0, 0}) == 0.0);
        CHECK(spacing_pdf_bounded(0.0, {0, 0, 0}) == 0.0);
    }
    SUBCASE("matches the geometric shell oracle pointwise for all-ones") {
        for (int i = 1; i <= 100; ++i) {
            const double sigma = 2.0 * i / 101.0;
            CHECK(spacing_pdf_bounded(sigma, {0, 0, 0}) ==
                  doctest::Approx(oracles::geometric_shell_density(sigma))
                      .epsilon(1e-10));
        }
    }
    SUBCASE("normalization by quadrature across a spec grid") {
        const BoundedExponents specs[] = {
            {0, 0, 0}, {1, 2, 0}, {0.5, 2.0, 1.0}, {2, 4, 3}, {0.25, 1.5, 0.75}};
        for (const auto& b : specs) {
            const auto r = integrate_1d(
                [&](double s) { return spacing_pdf_bounded(s, b); }, 0.0, 2.0, 1e-10);
            CHECK(std::fabs(r.value - 1.0) <= 1e-8);
        }
    }
    SUBCASE("small-sigma exponent matches the closed form") {
        const BoundedExponents b{0.5, 2.0, 1.0};
        const double nu = 2.0 * b.lambda2 + 2.0 - b.lambda3;  // 5
        const double s1 = 1e-4, s2 = 2e-4;
        const double slope = std::log(spacing_pdf_bounded(s2, b) /
                                      spacing_pdf_bounded(s1, b)) /
                             std::log(s2 / s1);
        CHECK(slope == doctest::Approx(nu).epsilon(1e-6));
    }
}

TEST_CASE("SpacingDensity wrapper") {
    const EnsembleSpec unbounded = UnboundedEnsemble{1.0, {1, 0, 1}};
    const SpacingDensity pu(unbounded);
    CHECK(std::isinf(pu.support_max()));
    for (double s : {0.1, 0.7, 1.9, 3.5}) {
        CHECK(pu(s) == doctest::Approx(spacing_pdf_unbounded(s, 1.0, {1, 0, 1}))
                           .epsilon(1e-14));
    }
    const EnsembleSpec bounded = BoundedEnsemble{{0.5, 2.0, 1.0}};
    const SpacingDensity pb(bounded);
    CHECK(pb.support_max() == 2.0);
    for (double s : {0.1, 0.7, 1.3, 1.99}) {
        CHECK(pb(s) == doctest::Approx(spacing_pdf_bounded(s, {0.5, 2.0, 1.0}))
                           .epsilon(1e-14));
    }
    CHECK_THROWS_AS(SpacingDensity(EnsembleSpec(UnboundedEnsemble{-1.0, {0, 0, 0}})),
                    std::invalid_argument);
}

TEST_CASE("repulsion exponent") {
    CHECK(repulsion_exponent(UnboundedEnsemble{1.0, {0, 0, 0}}) == 2.0);
    CHECK(repulsion_exponent(UnboundedEnsemble{1.0, {1, 0, 1}}) == 4.0);
    CHECK(repulsion_exponent(UnboundedEnsemble{1.0, {1, 1, 2}}) == 8.0);
    CHECK(repulsion_exponent(BoundedEnsemble{{0, 0, 0}}) == 2.0);
    CHECK(repulsion_exponent(BoundedEnsemble{{0.5, 2.0, 1.0}}) == 5.0);
}

TEST_CASE("invariance residual") {
    const ExponentTriple t{1, 1, 2};
    SUBCASE("zero at epsilon = 0") {
        CHECK(invariance_residual(MatrixParams(1, 1, 1, 1), t, 1.0, 0.0) == 0.0);
    }
    SUBCASE("second-order decay under epsilon halving") {
        RngStream rng(31, 0);
        for (int i = 0; i < 100; ++i) {
            auto coord = [&] {
                const double v = 0.25 + 1.75 * rng.uniform();
                return rng.uniform() < 0.5 ? -v : v;
            };
            const MatrixParams p(coord(), coord(), coord(), coord());
            const double r1 = invariance_residual(p, t, 1.0, 1e-3);
            const double r2 = invariance_residual(p, t, 1.0, 5e-4);
            CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.125));
        }
    }
    SUBCASE("vanishing transformation at y1 = 0 or y2 = 0") {
        // Specs whose power law is flat in the vanishing coordinate.
        CHECK(invariance_residual(MatrixParams(1.2, 0.0, 0.7, 0.4), {1, 0, 1}, 1.0,
                                  1e-3) == 0.0);
        CHECK(invariance_residual(MatrixParams(1.2, 0.5, 0.7, 0.0), {0, 0, 0}, 1.0,
                                  1e-3) == 0.0);
    }
    SUBCASE("zeros of the power law rejected") {
        CHECK_THROWS_AS(invariance_residual(MatrixParams(0, 1, 1, 1), t, 1.0, 1e-3),
                        std::invalid_argument);
    }
    SUBCASE("epsilon domain enforced") {
        CHECK_THROWS_AS(invariance_residual(MatrixParams(1, 1, 1, 1), t, 1.0, 0.1),
                        std::invalid_argument);
        CHECK_THROWS_AS(invariance_residual(MatrixParams(1, 1, 1, 1), t, 1.0, -1e-4),
                        std::invalid_argument);
    }
}
