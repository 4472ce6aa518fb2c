// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ptrmt {

/// Sup-norm distance between the empirical CDF of sorted samples and a
/// reference CDF.  Rejects unsorted or empty input.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

/// One-sample asymptotic critical value c(significance)/sqrt(n), with
/// c = sqrt(-ln(significance/2)/2); c(0.01) = 1.6276.
double ks_critical_value(std::size_t n, double significance = 0.01);

/// Two-sample KS distance between two sorted samples.
double ks_two_sample_statistic(std::span<const double> sorted_a,
                               std::span<const double> sorted_b);

/// Secondary GOF statistic: Pearson chi-squared of the samples pushed
/// through the reference CDF against uniform equal-probability cells
/// (dof = cells - 1).  KS is the primary statistic; this one is binned.
double chi_squared_statistic(std::span<const double> samples,
                             const std::function<double(double)>& cdf, int cells);

double ks_two_sample_critical(std::size_t n, std::size_t m,
                              double significance = 0.01);

/// CDF of a non-negative density on [lo, hi], built once by accumulating
/// panel quadratures on a uniform grid and evaluated by one local
/// Kronrod-15 panel from the nearest cached node.  Monotone by construction.
class CachedCdf {
  public:
    CachedCdf(std::function<double(double)> density, double lo, double hi,
              double tol = 1e-9, int panels = 512);

    double operator()(double x) const;

    /// Integral of the density over [lo, hi].
    double total() const { return prefix_.back(); }

  private:
    std::function<double(double)> density_;
    double lo_, hi_, step_;
    std::vector<double> prefix_;
};

struct ExponentFit {
    double nu_hat = 0.0;
    double std_error = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    int bins_used = 0;
    std::size_t sample_size = 0;
    /// Secondary estimate from the empirical-CDF slope minus one, reported
    /// for robustness against binning.
    double alt_nu_hat = 0.0;
};

/// Least-squares slope of log(count density) against log(sigma) over
/// log-spaced bins covering the spacings below the window_quantile empirical
/// quantile (the lower bin edge sits at the window_quantile/50 quantile so no
/// bin is starved).  Empty bins are dropped; fewer than four surviving bins
/// is an error.  Requires at least 1e5 spacings and 0 < window_quantile <= 0.1.
ExponentFit fit_exponent(std::span<const double> spacings,
                         double window_quantile = 0.05, int bins = 16);

struct Histogram {
    std::vector<double> edges;    // bins + 1 edges, starting at 0
    std::vector<double> density;  // normalized: sum(density * width) = 1
};

/// Density-normalized histogram of non-negative values over [0, upper]
/// (upper defaults to the sample maximum when non-positive).
Histogram build_histogram(std::span<const double> values, int bins,
                          double upper = 0.0);

}  // namespace ptrmt
