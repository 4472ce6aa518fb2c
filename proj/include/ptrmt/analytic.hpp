// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ptrmt/core.hpp"
#include "ptrmt/ensemble.hpp"

namespace ptrmt {

/// Normalization constant A of the matrix-element density
/// A x1^2l y1^2(m-l) x2^2(m-n) y2^2n exp(-alpha r^2) over R^4:
/// A = 2^2m alpha^(2m+2) / (pi^2 (2l-1)!!(2n-1)!!(2m-2n-1)!!(2m-2l-1)!!).
double norm_constant_unbounded(double alpha, const ExponentTriple& t);

/// Full matrix-element density (power law times Gaussian weight) with
/// respect to Lebesgue measure on R^4.
double pdf_unbounded(const MatrixParams& p, double alpha, const ExponentTriple& t);

/// Normalization constant of the unit-ball density
/// A x1^(a1-1) x2^(a2-1) x3^(a3-1) x4^(a4-1) on the positive orthant of the
/// unit 4-ball: A = 16 Gamma(1 + sum a_i/2) / prod Gamma(a_i/2).
double norm_constant_bounded(const BoundedExponents& b);

/// Unit-ball matrix-element density.  Coordinates are (x1, x2, x3, x4) with
/// the relabeling x3 = y1 and x4 = y2; zero outside the positive orthant or
/// the unit ball (the boundary counts as inside).  Zero coordinates follow
/// 0^0 = 1.
double pdf_bounded(const MatrixParams& p, const BoundedExponents& b);

/// Prefactor C of the normalized unbounded spacing density
/// p(sigma) = C sigma^2q exp(-alpha sigma^2/4), q = 2m - l + 1:
/// C = (2 / Gamma(q + 1/2)) (alpha/4)^(q + 1/2).
double spacing_prefactor(double alpha, const ExponentTriple& t);

/// The prefactor printed in the source derivation,
/// alpha^(q+1/2) / (2 sqrt(pi) (q - 1/2) 2^q).  Equals spacing_prefactor for
/// q in {1, 2}; their ratio is (2q-3)!! in general.  Kept for cross-checks.
double spacing_prefactor_paper(double alpha, const ExponentTriple& t);

/// (printed prefactor) / (normalized prefactor) = (2q-3)!!.
double spacing_prefactor_ratio(const ExponentTriple& t);

/// Normalized spacing density of the unbounded ensemble, support [0, inf).
double spacing_pdf_unbounded(double sigma, double alpha, const ExponentTriple& t);

/// Normalized spacing density of the bounded ensemble, support [0, 2]:
/// p(sigma) = (A/2) (sigma/2)^(sum a_i - 1) (cot xi)^a1 / a1
///            * B(a3/2, a4/2)/2 * B(a2/2, (a3+a4)/2)/2,
/// with sin xi = sigma/2.  Small-sigma behavior sigma^(2 lambda2 + 2 - lambda3).
double spacing_pdf_bounded(double sigma, const BoundedExponents& b);

/// Spacing density selected by the ensemble variant, with the constants
/// precomputed once.  Callable; integrates to 1 over its support.
class SpacingDensity {
  public:
    explicit SpacingDensity(EnsembleSpec spec);

    double operator()(double sigma) const;

    /// 2 for the bounded variant, +inf for the unbounded one.
    double support_max() const;

    const EnsembleSpec& spec() const { return spec_; }

  private:
    EnsembleSpec spec_;
    // Unbounded: p = exp(log_pref_ + 2q log sigma - alpha sigma^2/4).
    // Bounded:   p = exp(log_pref_ + (sum a - 1) log(sigma/2) + a1 log cot xi).
    double log_pref_ = 0.0;
    double two_q_ = 0.0;        // unbounded sigma exponent
    double alpha_ = 0.0;
    double alpha_sum_ = 0.0;    // bounded: sum of alphas
    double alpha1_ = 0.0;
    double small_sigma_exponent_ = 0.0;
    bool bounded_ = false;
};

/// First-order invariance residual of the factorized density under the
/// infinitesimal similarity transformation: the squared-magnitude arguments
/// of the two factors shift by +-4 eps y1 y2 and each factor responds through
/// its radial derivative (computed by central differences on the implemented
/// power laws).  Second order in eps when the separation identity holds.
/// Requires 0 <= epsilon <= 1e-2 and a point off the zeros of the power law.
double invariance_residual(const MatrixParams& p, const ExponentTriple& t,
                           double alpha, double epsilon);

}  // namespace ptrmt
