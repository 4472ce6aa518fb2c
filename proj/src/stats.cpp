// SPDX-License-Identifier: Apache-2.0
#include "ptrmt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptrmt/quadrature.hpp"

namespace ptrmt {

double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_samples.size();
    if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
    if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end()))
        throw std::invalid_argument("ks_statistic: samples must be sorted");
    double d = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_samples[i]);
        const double hi = (static_cast<double>(i) + 1.0) * inv_n - f;
        const double lo = f - static_cast<double>(i) * inv_n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

double ks_critical_value(std::size_t n, double significance) {
    if (n == 0 || !(significance > 0.0 && significance < 1.0))
        throw std::invalid_argument("ks_critical_value: bad arguments");
    return std::sqrt(-0.5 * std::log(0.5 * significance)) /
           std::sqrt(static_cast<double>(n));
}

double ks_two_sample_statistic(std::span<const double> sorted_a,
                               std::span<const double> sorted_b) {
    if (sorted_a.empty() || sorted_b.empty())
        throw std::invalid_argument("ks_two_sample_statistic: empty sample");
    if (!std::is_sorted(sorted_a.begin(), sorted_a.end()) ||
        !std::is_sorted(sorted_b.begin(), sorted_b.end()))
        throw std::invalid_argument("ks_two_sample_statistic: samples must be sorted");
    const double na = static_cast<double>(sorted_a.size());
    const double nb = static_cast<double>(sorted_b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sorted_a.size() && j < sorted_b.size()) {
        const double x = std::min(sorted_a[i], sorted_b[j]);
        while (i < sorted_a.size() && sorted_a[i] <= x) ++i;
        while (j < sorted_b.size() && sorted_b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
    }
    return d;
}

double chi_squared_statistic(std::span<const double> samples,
                             const std::function<double(double)>& cdf, int cells) {
    if (samples.empty()) throw std::invalid_argument("chi_squared_statistic: empty sample");
    if (cells < 2) throw std::invalid_argument("chi_squared_statistic: cells >= 2 required");
    std::vector<double> counts(cells, 0.0);
    for (double x : samples) {
        const double u = cdf(x);
        int idx = static_cast<int>(u * cells);
        idx = std::clamp(idx, 0, cells - 1);
        counts[idx] += 1.0;
    }
    const double expected = static_cast<double>(samples.size()) / cells;
    double chi2 = 0.0;
    for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
    return chi2;
}

double ks_two_sample_critical(std::size_t n, std::size_t m, double significance) {
    if (n == 0 || m == 0 || !(significance > 0.0 && significance < 1.0))
        throw std::invalid_argument("ks_two_sample_critical: bad arguments");
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    return std::sqrt(-0.5 * std::log(0.5 * significance)) *
           std::sqrt((nd + md) / (nd * md));
}

CachedCdf::CachedCdf(std::function<double(double)> density, double lo, double hi,
                     double tol, int panels)
    : density_(std::move(density)), lo_(lo), hi_(hi) {
    if (!(hi > lo) || panels < 2 || !(tol > 0.0))
        throw std::invalid_argument("CachedCdf: bad arguments");
    step_ = (hi - lo) / panels;
    prefix_.resize(panels + 1);
    prefix_[0] = 0.0;
    const double panel_tol = tol / panels;
    for (int k = 0; k < panels; ++k) {
        const double a = lo + k * step_;
        const double b = (k == panels - 1) ? hi : lo + (k + 1) * step_;
        const auto r = integrate_1d(density_, a, b, panel_tol);
        // Densities are non-negative; clip panel rounding noise so the
        // interpolant stays monotone.
        prefix_[k + 1] = prefix_[k] + std::max(r.value, 0.0);
    }
}

double CachedCdf::operator()(double x) const {
    if (x <= lo_) return 0.0;
    if (x >= hi_) return prefix_.back();
    const int k = std::min(static_cast<int>((x - lo_) / step_),
                           static_cast<int>(prefix_.size()) - 2);
    const double node = lo_ + k * step_;
    if (x <= node) return prefix_[k];
    return prefix_[k] + std::max(detail::gk15_panel(density_, node, x).value, 0.0);
}

namespace {

struct LineFit {
    double slope = 0.0;
    double slope_stderr = 0.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t k = xs.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(k);
    mean_y /= static_cast<double>(k);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    if (k > 2) {
        const double intercept = mean_y - fit.slope * mean_x;
        double ssr = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double r = ys[i] - intercept - fit.slope * xs[i];
            ssr += r * r;
        }
        fit.slope_stderr = std::sqrt(ssr / static_cast<double>(k - 2) / sxx);
    }
    return fit;
}

}  // namespace

ExponentFit fit_exponent(std::span<const double> spacings,
                         double window_quantile, int bins) {
    if (spacings.size() < 100000)
        throw std::invalid_argument("fit_exponent: at least 1e5 spacings required");
    if (!(window_quantile > 0.0 && window_quantile <= 0.1))
        throw std::invalid_argument("fit_exponent: 0 < window_quantile <= 0.1 violated");
    if (bins < 4) throw std::invalid_argument("fit_exponent: bins >= 4 required");

    std::vector<double> sorted;
    sorted.reserve(spacings.size());
    for (double s : spacings) {
        if (s > 0.0) sorted.push_back(s);
    }
    if (sorted.size() < 100000)
        throw std::invalid_argument("fit_exponent: at least 1e5 positive spacings required");
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    auto quantile = [&](double q) {
        const auto idx = static_cast<std::size_t>(q * static_cast<double>(n));
        return sorted[std::min(idx, n - 1)];
    };
    const double hi = quantile(window_quantile);
    const double lo = quantile(window_quantile / 50.0);
    if (!(hi > lo && lo > 0.0))
        throw std::runtime_error("fit_exponent: degenerate fit window");

    const double log_lo = std::log(lo);
    const double log_step = (std::log(hi) - log_lo) / bins;
    std::vector<double> edges(bins + 1);
    for (int i = 0; i <= bins; ++i) edges[i] = std::exp(log_lo + i * log_step);

    std::vector<double> log_mid, log_density, log_edge, log_ecdf;
    const double dn = static_cast<double>(n);
    for (int i = 0; i < bins; ++i) {
        const auto it_lo = std::lower_bound(sorted.begin(), sorted.end(), edges[i]);
        const auto it_hi = std::lower_bound(sorted.begin(), sorted.end(), edges[i + 1]);
        const auto count = static_cast<double>(it_hi - it_lo);
        if (count > 0.0) {
            log_mid.push_back(log_lo + (i + 0.5) * log_step);
            log_density.push_back(std::log(count / (dn * (edges[i + 1] - edges[i]))));
        }
    }
    for (int i = 0; i <= bins; ++i) {
        const auto rank = static_cast<double>(
            std::upper_bound(sorted.begin(), sorted.end(), edges[i]) - sorted.begin());
        if (rank > 0.0) {
            log_edge.push_back(std::log(edges[i]));
            log_ecdf.push_back(std::log(rank / dn));
        }
    }
    if (log_mid.size() < 4)
        throw std::runtime_error("fit_exponent: fewer than 4 non-empty bins");

    const LineFit density_fit = least_squares(log_mid, log_density);
    const LineFit cdf_fit = least_squares(log_edge, log_ecdf);

    ExponentFit out;
    out.nu_hat = density_fit.slope;
    out.std_error = density_fit.slope_stderr;
    out.window_lo = lo;
    out.window_hi = hi;
    out.bins_used = static_cast<int>(log_mid.size());
    out.sample_size = spacings.size();
    out.alt_nu_hat = cdf_fit.slope - 1.0;
    if (!std::isfinite(out.nu_hat))
        throw std::runtime_error("fit_exponent: non-finite slope");
    return out;
}

Histogram build_histogram(std::span<const double> values, int bins, double upper) {
    if (values.empty()) throw std::invalid_argument("build_histogram: empty input");
    if (bins < 1) throw std::invalid_argument("build_histogram: bins >= 1 required");
    double hi = upper;
    if (!(hi > 0.0)) {
        hi = *std::max_element(values.begin(), values.end());
        if (!(hi > 0.0)) hi = 1.0;
    }
    Histogram h;
    h.edges.resize(bins + 1);
    const double width = hi / bins;
    for (int i = 0; i <= bins; ++i) h.edges[i] = width * i;
    std::vector<double> counts(bins, 0.0);
    for (double v : values) {
        int idx = static_cast<int>(v / width);
        idx = std::clamp(idx, 0, bins - 1);
        counts[idx] += 1.0;
    }
    h.density.resize(bins);
    const double norm = 1.0 / (static_cast<double>(values.size()) * width);
    for (int i = 0; i < bins; ++i) h.density[i] = counts[i] * norm;
    return h;
}

}  // namespace ptrmt
