// SPDX-License-Identifier: Apache-2.0
#include "ptrmt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace ptrmt {

namespace detail {

namespace {
// 15-point Kronrod abscissae (positive half) and weights; the 7-point Gauss
// rule sits on the odd-index abscissae.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};
}  // namespace

QuadratureResult gk15_panel(const std::function<double(double)>& f,
                            double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    }
    return {result_kronrod * half,
            std::fabs((result_kronrod - result_gauss) * half)};
}

}  // namespace detail

namespace {

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b, double tol) {
    constexpr int kMaxPanels = 4000;
    std::priority_queue<Panel> panels;
    auto first = detail::gk15_panel(f, a, b);
    panels.push({a, b, first.value, first.error});
    double total_value = first.value;
    double total_error = first.error;
    int used = 1;
    while (total_error > tol && used < kMaxPanels) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at floating-point resolution; cannot refine further.
            panels.push(worst);
            break;
        }
        const auto left = detail::gk15_panel(f, worst.a, mid);
        const auto right = detail::gk15_panel(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push({worst.a, mid, left.value, left.error});
        panels.push({mid, worst.b, right.value, right.error});
        ++used;
    }
    if (!(total_error <= tol) && used >= kMaxPanels) {
        throw QuadratureError("integrate_1d: panel budget exhausted at error " +
                              std::to_string(total_error));
    }
    if (!std::isfinite(total_value)) {
        throw QuadratureError("integrate_1d: non-finite integral estimate");
    }
    return {total_value, total_error};
}

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f,
                              double a, double b, double tol) {
    if (std::isnan(a) || std::isnan(b) || !(tol > 0.0))
        throw std::invalid_argument("integrate_1d: bad bounds or tolerance");
    if (a == b) return {0.0, 0.0};
    if (a > b) {
        auto r = integrate_1d(f, b, a, tol);
        return {-r.value, r.error};
    }
    const bool lo_inf = std::isinf(a);
    const bool hi_inf = std::isinf(b);
    if (!lo_inf && !hi_inf) return integrate_finite(f, a, b, tol);
    if (!lo_inf && hi_inf) {
        // x = a + t/(1-t), dx = dt/(1-t)^2, t in [0, 1)
        auto g = [&f, a](double t) {
            const double om = 1.0 - t;
            return f(a + t / om) / (om * om);
        };
        return integrate_finite(g, 0.0, 1.0, tol);
    }
    if (lo_inf && !hi_inf) {
        auto r = integrate_1d([&f](double x) { return f(-x); }, -b,
                              std::numeric_limits<double>::infinity(), tol);
        return r;
    }
    // Whole line: split at zero to keep each half on its own transform.
    auto lower = integrate_1d([&f](double x) { return f(-x); }, 0.0,
                              std::numeric_limits<double>::infinity(), 0.5 * tol);
    auto upper = integrate_1d(f, 0.0, std::numeric_limits<double>::infinity(),
                              0.5 * tol);
    return {lower.value + upper.value, lower.error + upper.error};
}

}  // namespace ptrmt
