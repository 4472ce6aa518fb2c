// SPDX-License-Identifier: Apache-2.0
#include "ptrmt/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptrmt/analytic.hpp"
#include "ptrmt/montecarlo.hpp"
#include "ptrmt/quadrature.hpp"
#include "ptrmt/sampling.hpp"
#include "ptrmt/special.hpp"
#include "ptrmt/stats.hpp"

namespace ptrmt {

nlohmann::json VerificationReport::to_json() const {
    return nlohmann::json{{"check", check},
                          {"estimate", estimate},
                          {"stderr", uncertainty},
                          {"reference", reference},
                          {"statistic", statistic},
                          {"threshold", threshold},
                          {"verdict", pass ? "pass" : "fail"},
                          {"n", n}};
}

namespace {

// Reserved stream ids for the verification oracles, clear of the batch
// sampler's chunk-indexed streams.
constexpr std::uint64_t kMcStream = (1ULL << 62) + 1;

// Spacing value beyond which the unbounded density's remaining mass is below
// about 1e-13: sigma^2 alpha / 4 follows a Gamma(q + 1/2, 1) law.
double unbounded_tail_cut(double alpha, const ExponentTriple& t) {
    const double a = 2.0 * t.m - t.l + 1.5;
    double lo = 0.0, hi = 4.0 * (a + 8.0);
    while (gamma_p(a, hi) < 1.0 - 1e-13) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gamma_p(a, mid) < 1.0 - 1e-13 ? lo : hi) = mid;
    }
    return 2.0 * std::sqrt(hi / alpha);
}

VerificationReport mc_normalization_check(const EnsembleSpec& spec, std::size_t n,
                                          std::uint64_t seed, const VerifyConfig& cfg) {
    VerificationReport report;
    report.check = "normalization_mc";
    report.reference = 1.0;
    report.n = n;
    RngStream rng(seed, kMcStream);
    McResult mc;
    if (const auto* u = std::get_if<UnboundedEnsemble>(&spec)) {
        const double alpha = u->alpha;
        const ExponentTriple t = u->exponents;
        mc = mc_integrate_gaussian_r4(
            [alpha, t](const MatrixParams& p) { return pdf_unbounded(p, alpha, t); },
            alpha, n, rng);
    } else {
        const BoundedExponents b = std::get<BoundedEnsemble>(spec).exponents;
        mc = mc_integrate_unit_cube4(
            [b](const MatrixParams& p) { return pdf_bounded(p, b); }, n, rng);
    }
    report.estimate = mc.estimate;
    report.uncertainty = mc.std_error;
    report.statistic = std::fabs(mc.estimate - 1.0);
    report.threshold = cfg.mc_abs_tol;
    report.pass = report.statistic <= cfg.mc_band_sigmas * mc.std_error + 1e-9 &&
                  report.statistic < cfg.mc_abs_tol;
    return report;
}

VerificationReport spacing_norm_check(const SpacingDensity& density, std::size_t n,
                                      const VerifyConfig& cfg) {
    VerificationReport report;
    report.check = "spacing_norm_quadrature";
    report.reference = 1.0;
    report.n = n;
    double hi = density.support_max();
    if (std::isinf(hi)) {
        const auto& u = std::get<UnboundedEnsemble>(density.spec());
        hi = unbounded_tail_cut(u.alpha, u.exponents);
    }
    const auto r = integrate_1d([&density](double s) { return density(s); }, 0.0,
                                hi, cfg.quad_tol);
    report.estimate = r.value;
    report.uncertainty = r.error;
    report.statistic = std::fabs(r.value - 1.0);
    report.threshold = cfg.spacing_norm_tol;
    report.pass = report.statistic <= cfg.spacing_norm_tol;
    return report;
}

VerificationReport spacing_ks_check(const SpacingDensity& density,
                                    const std::vector<double>& sorted_spacings,
                                    const VerifyConfig& cfg) {
    VerificationReport report;
    report.check = "spacing_ks";
    report.n = sorted_spacings.size();
    double hi = density.support_max();
    if (std::isinf(hi)) {
        const auto& u = std::get<UnboundedEnsemble>(density.spec());
        hi = unbounded_tail_cut(u.alpha, u.exponents);
    }
    const CachedCdf cdf([&density](double s) { return density(s); }, 0.0, hi);
    report.statistic = ks_statistic(sorted_spacings,
                                    [&cdf](double s) { return cdf(s); });
    report.estimate = report.statistic;
    report.threshold = ks_critical_value(sorted_spacings.size(), cfg.ks_significance);
    report.pass = report.statistic <= report.threshold;
    return report;
}

VerificationReport exponent_check(const EnsembleSpec& spec,
                                  const std::vector<double>& spacings,
                                  const VerifyConfig& cfg) {
    VerificationReport report;
    report.check = "repulsion_exponent_fit";
    report.n = spacings.size();
    report.reference = repulsion_exponent(spec);
    const ExponentFit fit =
        fit_exponent(spacings, cfg.fit_window_quantile, cfg.fit_bins);
    report.estimate = fit.nu_hat;
    report.uncertainty = fit.std_error;
    report.statistic = std::fabs(fit.nu_hat - report.reference);
    report.threshold = cfg.exponent_tol;
    report.pass = report.statistic <=
                  std::max(cfg.mc_band_sigmas * fit.std_error, cfg.exponent_tol);
    return report;
}

// Shell-geometry density of the uniform (all alpha_i = 1) unit-ball case:
// (2 sigma^2 / pi) sqrt(1 - sigma^2 / 4).
double geometric_shell_density(double sigma) {
    if (sigma <= 0.0 || sigma >= 2.0) return 0.0;
    return 2.0 * sigma * sigma / 3.14159265358979323846 *
           std::sqrt(1.0 - 0.25 * sigma * sigma);
}

VerificationReport paper_crosscheck_unbounded(const UnboundedEnsemble& u,
                                              const VerifyConfig& cfg) {
    VerificationReport report;
    report.check = "paper_prefactor_crosscheck";
    report.n = 1;
    const double ratio = spacing_prefactor_paper(u.alpha, u.exponents) /
                         spacing_prefactor(u.alpha, u.exponents);
    report.estimate = ratio;
    report.reference =
        cfg.paper_formula_identity ? 1.0 : spacing_prefactor_ratio(u.exponents);
    report.statistic = std::fabs(ratio / report.reference - 1.0);
    report.threshold = cfg.paper_rel_tol;
    report.pass = report.statistic <= cfg.paper_rel_tol;
    return report;
}

VerificationReport geometric_crosscheck_bounded(const BoundedExponents& b) {
    VerificationReport report;
    report.check = "geometric_oracle_crosscheck";
    report.reference = 0.0;
    report.threshold = 1e-10;
    const int points = 100;
    report.n = points;
    double worst = 0.0;
    for (int i = 1; i <= points; ++i) {
        const double sigma = 2.0 * i / (points + 1.0);
        const double implemented = spacing_pdf_bounded(sigma, b);
        const double oracle = geometric_shell_density(sigma);
        worst = std::max(worst, std::fabs(implemented - oracle) /
                                    std::max(oracle, 1e-300));
    }
    report.estimate = worst;
    report.statistic = worst;
    report.pass = worst <= report.threshold;
    return report;
}

template <typename Fn>
void run_check(std::vector<VerificationReport>& reports, const char* name, Fn&& fn) {
    try {
        reports.push_back(fn());
    } catch (const std::exception& e) {
        VerificationReport failed;
        failed.check = name;
        failed.pass = false;
        failed.detail = e.what();
        reports.push_back(failed);
    }
}

}  // namespace

std::vector<VerificationReport> verify_ensemble(const EnsembleSpec& spec,
                                                std::size_t n, std::uint64_t seed,
                                                const VerifyConfig& cfg) {
    std::vector<VerificationReport> reports;
    if (auto err = validate(spec)) {
        VerificationReport invalid;
        invalid.check = "spec_validation";
        invalid.pass = false;
        invalid.detail = *err;
        reports.push_back(invalid);
        return reports;
    }

    run_check(reports, "normalization_mc",
              [&] { return mc_normalization_check(spec, n, seed, cfg); });

    const SpacingDensity density(spec);
    run_check(reports, "spacing_norm_quadrature",
              [&] { return spacing_norm_check(density, n, cfg); });

    std::vector<double> spacings;
    try {
        spacings = sample_batch(spec, n, seed, cfg.workers).spacings();
    } catch (const std::exception& e) {
        VerificationReport failed;
        failed.check = "spacing_ks";
        failed.detail = e.what();
        reports.push_back(failed);
        failed.check = "repulsion_exponent_fit";
        reports.push_back(failed);
        spacings.clear();
    }
    if (!spacings.empty()) {
        std::sort(spacings.begin(), spacings.end());
        run_check(reports, "spacing_ks",
                  [&] { return spacing_ks_check(density, spacings, cfg); });
        run_check(reports, "repulsion_exponent_fit",
                  [&] { return exponent_check(spec, spacings, cfg); });
    }

    if (const auto* u = std::get_if<UnboundedEnsemble>(&spec)) {
        run_check(reports, "paper_prefactor_crosscheck",
                  [&] { return paper_crosscheck_unbounded(*u, cfg); });
    } else {
        const auto& b = std::get<BoundedEnsemble>(spec).exponents;
        const auto al = b.alphas();
        const bool all_ones = std::all_of(al.begin(), al.end(), [](double a) {
            return std::fabs(a - 1.0) < 1e-12;
        });
        if (all_ones) {
            run_check(reports, "geometric_oracle_crosscheck",
                      [&] { return geometric_crosscheck_bounded(b); });
        }
    }
    return reports;
}

}  // namespace ptrmt
