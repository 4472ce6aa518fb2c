// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace ptrmt {

/// k!! for k >= -1, with (-1)!! = 1 and 0!! = 1.  Exact product up to
/// k = 20, log-gamma form above that to dodge intermediate overflow.
double double_factorial(int k);

/// log(k!!) for k >= -1.
double log_double_factorial(int k);

/// log Beta(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a),
/// a > 0, x >= 0.  Series for x < a + 1, continued fraction otherwise.
double gamma_p(double a, double x);

/// Integer power with 0^0 = 1; exponentiation by squaring.
inline double ipow(double base, int k) {
    double result = 1.0;
    double acc = base;
    for (; k > 0; k >>= 1) {
        if (k & 1) result *= acc;
        acc *= acc;
    }
    return result;
}

}  // namespace ptrmt
