// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ptrmt/sampling.hpp"
#include "ptrmt/special.hpp"
#include "ptrmt/stats.hpp"

using namespace ptrmt;

TEST_CASE("ks statistic") {
    SUBCASE("samples from the reference law pass at 1%") {
        RngStream rng(71, 0);
        const int n = 100000;
        std::vector<double> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = rng.uniform();
        std::sort(xs.begin(), xs.end());
        const double d = ks_statistic(xs, [](double x) { return x; });
        CHECK(d < 1.63 / std::sqrt(static_cast<double>(n)));
    }
    SUBCASE("single sample at the median") {
        const std::vector<double> xs{0.5};
        CHECK(ks_statistic(xs, [](double x) { return x; }) == doctest::Approx(0.5));
    }
    SUBCASE("a shifted law is detected") {
        RngStream rng(72, 0);
        const int n = 100000;
        std::vector<double> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = 0.9 * rng.uniform();
        std::sort(xs.begin(), xs.end());
        const double d = ks_statistic(xs, [](double x) { return std::min(x, 1.0); });
        CHECK(d > 10.0 * ks_critical_value(n, 0.01));
    }
    SUBCASE("unsorted input rejected") {
        const std::vector<double> xs{0.5, 0.1};
        CHECK_THROWS_AS(ks_statistic(xs, [](double x) { return x; }),
                        std::invalid_argument);
    }
    SUBCASE("critical value matches the 1% table entry") {
        CHECK(ks_critical_value(1000000, 0.01) ==
              doctest::Approx(1.6276 / 1000.0).epsilon(1e-3));
    }
}

TEST_CASE("cached cdf accuracy") {
    // Against the closed-form CDF of the q = 1 spacing law, P(3/2, s^2/4).
    const auto density = [](double s) {
        return s <= 0.0 ? 0.0
                        : 2.0 / std::tgamma(1.5) * std::pow(0.25, 1.5) * s * s *
                              std::exp(-s * s / 4.0);
    };
    const CachedCdf cdf(density, 0.0, 16.0);
    for (double s : {0.05, 0.3, 1.0, 2.0, 3.7, 6.0}) {
        CHECK(cdf(s) == doctest::Approx(gamma_p(1.5, s * s / 4.0)).epsilon(1e-9));
    }
    CHECK(cdf(-1.0) == 0.0);
    CHECK(cdf(16.0) == doctest::Approx(1.0).epsilon(1e-9));
    // monotone
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double v = cdf(16.0 * i / 200.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("exponent fit recovers synthetic power laws") {
    // sigma = 2 sqrt(G), G ~ Gamma(q + 1/2, 1) draws from
    // C sigma^2q exp(-sigma^2/4); nu = 2q for nu in {2, 4, 6}.  The sigma^nu
    // regime of strongly repelling laws sits deep in the lower tail, so the
    // window quantile shrinks as nu grows.
    const struct { double q; double nu; double window; } cases[] = {
        {1.0, 2.0, 0.005}, {2.0, 4.0, 0.0005}, {3.0, 6.0, 0.0005}};
    for (const auto& c : cases) {
        RngStream rng(73, static_cast<std::uint64_t>(c.q));
        const int n = 4000000;
        std::vector<double> spacings(n);
        for (int i = 0; i < n; ++i) {
            spacings[i] = 2.0 * std::sqrt(gamma_variate(c.q + 0.5, 1.0, rng));
        }
        const auto fit = fit_exponent(spacings, c.window, 12);
        CHECK(std::fabs(fit.nu_hat - c.nu) <= 2.0 * fit.std_error);
        CHECK(fit.window_lo < fit.window_hi);
        CHECK(fit.bins_used >= 4);
        // The CDF-slope estimator agrees to its own (coarser) accuracy.
        CHECK(fit.alt_nu_hat == doctest::Approx(c.nu).epsilon(0.15));
    }
}

TEST_CASE("exponent fit error paths") {
    SUBCASE("too few spacings") {
        std::vector<double> tiny(100, 1.0);
        CHECK_THROWS_AS(fit_exponent(tiny, 0.05, 16), std::invalid_argument);
    }
    SUBCASE("window quantile domain") {
        std::vector<double> xs(100000, 1.0);
        CHECK_THROWS_AS(fit_exponent(xs, 0.5, 16), std::invalid_argument);
        CHECK_THROWS_AS(fit_exponent(xs, 0.0, 16), std::invalid_argument);
    }
    SUBCASE("degenerate sample fails explicitly") {
        // All mass at one point: no usable window.
        std::vector<double> xs(100000, 1.0);
        CHECK_THROWS(fit_exponent(xs, 0.05, 16));
    }
}

TEST_CASE("chi-squared secondary statistic") {
    RngStream rng(75, 0);
    const int n = 100000;
    std::vector<double> xs(n);
    for (auto& x : xs) x = rng.uniform();
    const int cells = 32;
    // correct law: statistic near its dof = 31; 99th percentile is ~52.2
    CHECK(chi_squared_statistic(xs, [](double x) { return x; }, cells) < 52.2);
    // shifted law blows up
    CHECK(chi_squared_statistic(xs, [](double x) { return std::min(1.0, 1.2 * x); },
                                cells) > 500.0);
}

TEST_CASE("histogram normalization") {
    RngStream rng(74, 0);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = 3.0 * rng.uniform();
    const auto h = build_histogram(xs, 64);
    double mass = 0.0;
    for (std::size_t i = 0; i < h.density.size(); ++i) {
        mass += h.density[i] * (h.edges[i + 1] - h.edges[i]);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}
