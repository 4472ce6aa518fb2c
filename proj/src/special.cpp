// SPDX-License-Identifier: Apache-2.0
#include "ptrmt/special.hpp"

#include <cmath>
#include <stdexcept>

namespace ptrmt {

namespace {
constexpr double kHalfLogPi = 0.57236494292470008707;  // log(pi)/2
}

double log_double_factorial(int k) {
    if (k < -1) throw std::invalid_argument("double_factorial: k >= -1 violated");
    if (k <= 1) return 0.0;
    if (k % 2 == 0) {
        // (2j)!! = 2^j j!
        const double j = k / 2;
        return j * std::log(2.0) + std::lgamma(j + 1.0);
    }
    // (2j-1)!! = 2^j Gamma(j + 1/2) / sqrt(pi)
    const double j = (k + 1) / 2;
    return j * std::log(2.0) + std::lgamma(j + 0.5) - kHalfLogPi;
}

double double_factorial(int k) {
    if (k < -1) throw std::invalid_argument("double_factorial: k >= -1 violated");
    if (k <= 20) {
        double acc = 1.0;
        for (int i = k; i > 1; i -= 2) acc *= i;
        return acc;
    }
    return std::exp(log_double_factorial(k));
}

double log_beta(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("log_beta: a, b > 0 violated");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace {

// Series representation, converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) {
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw std::runtime_error("gamma_p: series failed to converge");
}

// Modified Lentz continued fraction for Q(a, x), x >= a + 1.
double gamma_q_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) {
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw std::runtime_error("gamma_p: continued fraction failed to converge");
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_p: a > 0 violated");
    if (!(x >= 0.0)) throw std::invalid_argument("gamma_p: x >= 0 violated");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

}  // namespace ptrmt
