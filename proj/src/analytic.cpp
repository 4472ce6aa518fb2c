// SPDX-License-Identifier: Apache-2.0
#include "ptrmt/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptrmt/special.hpp"

namespace ptrmt {

namespace {
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLog2 = 0.69314718055994530942;

double require_alpha(double alpha) {
    if (!(std::isfinite(alpha) && alpha > 0.0))
        throw std::invalid_argument("alpha > 0 violated");
    return alpha;
}
}  // namespace

double norm_constant_unbounded(double alpha, const ExponentTriple& t) {
    require_valid(t);
    require_alpha(alpha);
    const double log_xi = log_double_factorial(2 * t.l - 1) +
                          log_double_factorial(2 * t.n - 1) +
                          log_double_factorial(2 * t.m - 2 * t.n - 1) +
                          log_double_factorial(2 * t.m - 2 * t.l - 1);
    return std::exp(2.0 * t.m * kLog2 + (2.0 * t.m + 2.0) * std::log(alpha) -
                    2.0 * kLogPi - log_xi);
}

double pdf_unbounded(const MatrixParams& p, double alpha, const ExponentTriple& t) {
    const double a = norm_constant_unbounded(alpha, t);
    const double r2 = p.x1 * p.x1 + p.y1 * p.y1 + p.x2 * p.x2 + p.y2 * p.y2;
    return a * ipow(p.x1 * p.x1, t.l) * ipow(p.y1 * p.y1, t.m - t.l) *
           ipow(p.x2 * p.x2, t.m - t.n) * ipow(p.y2 * p.y2, t.n) *
           std::exp(-alpha * r2);
}

double norm_constant_bounded(const BoundedExponents& b) {
    require_valid(b);
    const auto a = b.alphas();
    double log_num = std::lgamma(1.0 + 0.5 * (a[0] + a[1] + a[2] + a[3]));
    double log_den = 0.0;
    for (double ai : a) log_den += std::lgamma(0.5 * ai);
    return std::exp(4.0 * kLog2 + log_num - log_den);
}

double pdf_bounded(const MatrixParams& p, const BoundedExponents& b) {
    const double a_const = norm_constant_bounded(b);
    const double coords[4] = {p.x1, p.x2, p.y1, p.y2};  // (x1, x2, x3, x4)
    const auto al = b.alphas();
    const double expo[4] = {al[0] - 1.0, al[1] - 1.0, al[2] - 1.0, al[3] - 1.0};
    double r2 = 0.0;
    double powers = 1.0;
    for (int i = 0; i < 4; ++i) {
        if (coords[i] < 0.0) return 0.0;
        r2 += coords[i] * coords[i];
        powers *= std::pow(coords[i], expo[i]);  // pow(0, 0) = 1 wanted
    }
    if (r2 > 1.0) return 0.0;
    return a_const * powers;
}

double spacing_prefactor(double alpha, const ExponentTriple& t) {
    require_valid(t);
    require_alpha(alpha);
    const double q = 2.0 * t.m - t.l + 1.0;
    return std::exp(kLog2 + (q + 0.5) * std::log(alpha / 4.0) - std::lgamma(q + 0.5));
}

double spacing_prefactor_paper(double alpha, const ExponentTriple& t) {
    require_valid(t);
    require_alpha(alpha);
    const double q = 2.0 * t.m - t.l + 1.0;
    // (1/2) alpha^(q+1/2) / (sqrt(pi) (q - 1/2)) * (1/2)^q, from writing the
    // printed density as prefactor * sigma^2q * exp(-alpha sigma^2/4).
    return std::exp((q + 0.5) * std::log(alpha) - (q + 1.0) * kLog2 -
                    0.5 * kLogPi - std::log(q - 0.5));
}

double spacing_prefactor_ratio(const ExponentTriple& t) {
    require_valid(t);
    const int q = 2 * t.m - t.l + 1;
    return double_factorial(2 * q - 3);
}

double spacing_pdf_unbounded(double sigma, double alpha, const ExponentTriple& t) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("sigma >= 0 violated");
    const double c = spacing_prefactor(alpha, t);
    if (sigma == 0.0) return 0.0;  // q >= 1 for every admissible triple
    const double q = 2.0 * t.m - t.l + 1.0;
    return c * std::exp(2.0 * q * std::log(sigma) - alpha * sigma * sigma / 4.0);
}

namespace {

struct BoundedSpacingTerms {
    double log_pref;   // log of everything independent of sigma
    double alpha_sum;  // sum of alphas
    double alpha1;
    double exponent;   // small-sigma power 2 lambda2 + 2 - lambda3
};

BoundedSpacingTerms bounded_spacing_terms(const BoundedExponents& b) {
    const auto a = b.alphas();
    const double sum = a[0] + a[1] + a[2] + a[3];
    const double log_a = 4.0 * kLog2 + std::lgamma(1.0 + 0.5 * sum) -
                         (std::lgamma(0.5 * a[0]) + std::lgamma(0.5 * a[1]) +
                          std::lgamma(0.5 * a[2]) + std::lgamma(0.5 * a[3]));
    const double log_pref = log_a - kLog2                         // A/2
                            + log_beta(0.5 * a[2], 0.5 * a[3]) - kLog2
                            + log_beta(0.5 * a[1], 0.5 * (a[2] + a[3])) - kLog2
                            - std::log(a[0]);
    return {log_pref, sum, a[0], 2.0 * b.lambda2 + 2.0 - b.lambda3};
}

double bounded_spacing_eval(const BoundedSpacingTerms& terms, double sigma) {
    if (sigma < 0.0 || sigma > 2.0) return 0.0;
    if (sigma == 0.0) {
        if (terms.exponent > 0.0) return 0.0;
        if (terms.exponent < 0.0) return std::numeric_limits<double>::infinity();
        // sigma^0 limit: cot xi -> 2/sigma cancels the sigma powers exactly.
        return std::exp(terms.log_pref + (1.0 - terms.alpha_sum) * kLog2 +
                        terms.alpha1 * kLog2);
    }
    if (sigma == 2.0) return 0.0;  // cot xi vanishes at the boundary
    const double log_cot = 0.5 * std::log(4.0 - sigma * sigma) - std::log(sigma);
    return std::exp(terms.log_pref +
                    (terms.alpha_sum - 1.0) * std::log(0.5 * sigma) +
                    terms.alpha1 * log_cot);
}

}  // namespace

double spacing_pdf_bounded(double sigma, const BoundedExponents& b) {
    require_valid(b);
    return bounded_spacing_eval(bounded_spacing_terms(b), sigma);
}

SpacingDensity::SpacingDensity(EnsembleSpec spec) : spec_(std::move(spec)) {
    require_valid(spec_);
    if (const auto* u = std::get_if<UnboundedEnsemble>(&spec_)) {
        alpha_ = u->alpha;
        two_q_ = 2.0 * (2 * u->exponents.m - u->exponents.l + 1);
        log_pref_ = std::log(spacing_prefactor(u->alpha, u->exponents));
        small_sigma_exponent_ = two_q_;
        return;
    }
    bounded_ = true;
    const auto terms = bounded_spacing_terms(std::get<BoundedEnsemble>(spec_).exponents);
    log_pref_ = terms.log_pref;
    alpha_sum_ = terms.alpha_sum;
    alpha1_ = terms.alpha1;
    small_sigma_exponent_ = terms.exponent;
}

double SpacingDensity::operator()(double sigma) const {
    if (bounded_) {
        return bounded_spacing_eval(
            {log_pref_, alpha_sum_, alpha1_, small_sigma_exponent_}, sigma);
    }
    if (!(sigma >= 0.0)) throw std::invalid_argument("sigma >= 0 violated");
    if (sigma == 0.0) return 0.0;
    return std::exp(log_pref_ + two_q_ * std::log(sigma) -
                    alpha_ * sigma * sigma / 4.0);
}

double SpacingDensity::support_max() const {
    return bounded_ ? 2.0 : std::numeric_limits<double>::infinity();
}

namespace {

// x d/dx g(x, y) + y d/dy g(x, y) by central differences with relative steps.
template <typename F>
double radial_derivative(const F& g, double x, double y) {
    constexpr double rel = 1e-5;
    double acc = 0.0;
    if (x != 0.0) {
        const double h = rel * std::fabs(x);
        acc += x * (g(x + h, y) - g(x - h, y)) / (2.0 * h);
    }
    if (y != 0.0) {
        const double h = rel * std::fabs(y);
        acc += y * (g(x, y + h) - g(x, y - h)) / (2.0 * h);
    }
    return acc;
}

}  // namespace

double invariance_residual(const MatrixParams& p, const ExponentTriple& t,
                           double alpha, double epsilon) {
    require_valid(t);
    require_alpha(alpha);
    if (!(epsilon >= 0.0 && epsilon <= 1e-2))
        throw std::invalid_argument("0 <= epsilon <= 1e-2 violated");

    // Per-complex-coordinate power-law factors of the joint density.
    const auto f1 = [&t](double x, double y) {
        return ipow(x * x, t.l) * ipow(y * y, t.m - t.l);
    };
    const auto f2 = [&t](double x, double y) {
        return ipow(x * x, t.m - t.n) * ipow(y * y, t.n);
    };
    const double f1v = f1(p.x1, p.y1);
    const double f2v = f2(p.x2, p.y2);
    if (f1v == 0.0 || f2v == 0.0)
        throw std::invalid_argument("invariance_residual: point on a zero of the power law");

    // The transformation shifts the squared-magnitude arguments of the two
    // factors by +shift and -shift; each factor responds through its radial
    // derivative, and the Gaussian weight factors cancel between the pair.
    const double shift = 4.0 * epsilon * p.y1 * p.y2;
    const double e1 = radial_derivative(f1, p.x1, p.y1);
    const double e2 = radial_derivative(f2, p.x2, p.y2);
    const double w1 = std::exp(-alpha * shift);
    const double w2 = std::exp(alpha * shift);
    const double lhs = (f1v + 2.0 * shift * e1) * w1 * (f2v - 2.0 * shift * e2) * w2;
    return std::fabs(lhs / (f1v * f2v) - 1.0);
}

}  // namespace ptrmt
