// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace ptrmt {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated bound on the absolute error
};

class QuadratureError : public std::runtime_error {
  public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Gauss-Kronrod (7, 15) integration of a piecewise-smooth f over
/// [a, b], subdividing the worst panel until the summed error estimate is
/// at or below tol.  Infinite endpoints are mapped to finite panels with the
/// rational substitution t/(1 - t); integrands must decay there.  Throws
/// QuadratureError when the panel budget is exhausted before convergence.
QuadratureResult integrate_1d(const std::function<double(double)>& f,
                              double a, double b, double tol = 1e-10);

namespace detail {
/// One non-adaptive Kronrod-15 panel over finite [a, b]; error estimate is
/// the Gauss-7/Kronrod-15 difference.
QuadratureResult gk15_panel(const std::function<double(double)>& f,
                            double a, double b);
}  // namespace detail

}  // namespace ptrmt
