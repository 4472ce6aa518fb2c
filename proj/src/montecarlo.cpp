// SPDX-License-Identifier: Apache-2.0
#include "ptrmt/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace ptrmt {

namespace {

McResult accumulate(const std::function<double(std::size_t)>& draw, std::size_t n) {
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = draw(i);
        const double delta = v - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (v - mean);
    }
    const double variance = m2 / static_cast<double>(n - 1);
    McResult result;
    result.estimate = mean;
    result.std_error = std::sqrt(variance / static_cast<double>(n));
    result.n = n;
    // Flag ratios that never moved: the sample gives no variance information.
    result.degenerate = !(variance > mean * mean * 1e-28);
    return result;
}

void check_n(std::size_t n) {
    if (n < 1000) throw std::invalid_argument("mc_integrate: n >= 1000 violated");
}

}  // namespace

McResult mc_integrate_gaussian_r4(const std::function<double(const MatrixParams&)>& f,
                                  double alpha, std::size_t n, RngStream& rng) {
    check_n(n);
    if (!(std::isfinite(alpha) && alpha > 0.0))
        throw std::invalid_argument("alpha > 0 violated");
    const double scale = 1.0 / std::sqrt(alpha);
    // log of the proposal normalization (alpha / 2 pi)^2
    const double log_norm = 2.0 * std::log(alpha / 6.283185307179586476925287);
    return accumulate(
        [&](std::size_t) {
            const double x1 = scale * rng.normal();
            const double y1 = scale * rng.normal();
            const double x2 = scale * rng.normal();
            const double y2 = scale * rng.normal();
            const double r2 = x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2;
            const double log_q = log_norm - 0.5 * alpha * r2;
            return f(MatrixParams(x1, y1, x2, y2)) * std::exp(-log_q);
        },
        n);
}

McResult mc_integrate_unit_cube4(const std::function<double(const MatrixParams&)>& f,
                                 std::size_t n, RngStream& rng) {
    check_n(n);
    return accumulate(
        [&](std::size_t) {
            const double x1 = rng.uniform();
            const double x2 = rng.uniform();
            const double x3 = rng.uniform();
            const double x4 = rng.uniform();
            return f(MatrixParams(x1, x3, x2, x4));
        },
        n);
}

}  // namespace ptrmt
