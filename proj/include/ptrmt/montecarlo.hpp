// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

#include "ptrmt/core.hpp"
#include "ptrmt/rng.hpp"

namespace ptrmt {

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
    /// Set when the integrand/proposal ratio had (numerically) zero variance;
    /// the estimate is then exact up to rounding but the error bar is void.
    bool degenerate = false;
};

/// Importance-sampled integral of f over R^4 with an isotropic Gaussian
/// proposal of per-coordinate variance 1/alpha.  The proposal is deliberately
/// heavier-tailed than the ensemble weight exp(-alpha r^2), keeping the
/// importance ratios square-integrable for every admissible power law.
/// Requires n >= 1000.
McResult mc_integrate_gaussian_r4(const std::function<double(const MatrixParams&)>& f,
                                  double alpha, std::size_t n, RngStream& rng);

/// Plain Monte Carlo integral of f over the unit cube [0,1]^4 (which covers
/// the positive-orthant unit ball).  Requires n >= 1000.
McResult mc_integrate_unit_cube4(const std::function<double(const MatrixParams&)>& f,
                                 std::size_t n, RngStream& rng);

}  // namespace ptrmt
