// SPDX-License-Identifier: Apache-2.0
//
// ptrmt — sample, evaluate, verify, and plot the PT-symmetric SU(2)-like
// 2x2 ensemble.
//
// Exit codes: 0 success, 1 invalid configuration, 2 I/O failure,
//             3 verification failure, 4 insufficient data.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptrmt/analytic.hpp"
#include "ptrmt/core.hpp"
#include "ptrmt/ensemble.hpp"
#include "ptrmt/sampling.hpp"
#include "ptrmt/stats.hpp"
#include "ptrmt/svg.hpp"
#include "ptrmt/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitIoFailure = 2;
constexpr int kExitVerificationFailure = 3;
constexpr int kExitInsufficientData = 4;

struct CliConfig {
    std::string ensemble;
    double alpha = 1.0;
    int l = 0;
    int n = 0;
    int m = 0;
    double lambda0 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    long long count = 1000000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    int bins = 64;
    double window_quantile = 0.05;
    std::string format;
    std::string output;
    std::string input;
    std::vector<double> point;
    bool paper_formula = false;
    bool seed_given = false;
};

void add_ensemble_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--ensemble", cfg.ensemble, "Ensemble variant")
        ->required()
        ->check(CLI::IsMember({"unbounded", "bounded"}));
    cmd->add_option("--alpha", cfg.alpha, "Gaussian weight scale (unbounded)");
    cmd->add_option("-l", cfg.l, "Exponent l (unbounded)");
    cmd->add_option("-n", cfg.n, "Exponent n (unbounded)");
    cmd->add_option("-m", cfg.m, "Exponent m (unbounded)");
    cmd->add_option("--lambda0", cfg.lambda0, "Separation constant lambda0 (bounded)");
    cmd->add_option("--lambda2", cfg.lambda2, "Separation constant lambda2 (bounded)");
    cmd->add_option("--lambda3", cfg.lambda3, "Separation constant lambda3 (bounded)");
}

// Builds and validates the spec; prints the violated inequality and returns
// nullopt on failure.
std::optional<ptrmt::EnsembleSpec> build_spec(const CliConfig& cfg) {
    ptrmt::EnsembleSpec spec;
    if (cfg.ensemble == "unbounded") {
        spec = ptrmt::UnboundedEnsemble{cfg.alpha, {cfg.l, cfg.n, cfg.m}};
    } else {
        spec = ptrmt::BoundedEnsemble{{cfg.lambda0, cfg.lambda2, cfg.lambda3}};
    }
    if (auto err = ptrmt::validate(spec)) {
        std::cerr << "error: " << *err << "\n";
        return std::nullopt;
    }
    return spec;
}

// The output format of each subcommand is fixed; --format only lets a
// caller assert the one they expect.
int check_format(const CliConfig& cfg, const char* native) {
    if (!cfg.format.empty() && cfg.format != native) {
        std::cerr << "error: this subcommand emits " << native << " output, not "
                  << cfg.format << "\n";
        return kExitInvalidConfig;
    }
    return kExitOk;
}

// Writes to the configured path, or stdout when no path is set.
int emit_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIoFailure;
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return kExitIoFailure;
    }
    return kExitOk;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_sample(const CliConfig& cfg) {
    if (const int code = check_format(cfg, "csv"); code != kExitOk) return code;
    auto spec = build_spec(cfg);
    if (!spec) return kExitInvalidConfig;
    if (cfg.count < 0) {
        std::cerr << "error: count >= 0 violated\n";
        return kExitInvalidConfig;
    }
    const auto batch = ptrmt::sample_batch(*spec, static_cast<std::size_t>(cfg.count),
                                           cfg.seed, cfg.workers);
    std::string csv = "x1,y1,x2,y2,sigma\n";
    for (const auto& p : batch.params) {
        csv += format_double(p.x1) + "," + format_double(p.y1) + "," +
               format_double(p.x2) + "," + format_double(p.y2) + "," +
               format_double(ptrmt::spacing(p)) + "\n";
    }
    return emit_output(cfg.output, csv);
}

int run_pdf(const CliConfig& cfg) {
    auto spec = build_spec(cfg);
    if (!spec) return kExitInvalidConfig;
    const ptrmt::MatrixParams p(cfg.point[0], cfg.point[1], cfg.point[2], cfg.point[3]);
    double value = 0.0;
    if (const auto* u = std::get_if<ptrmt::UnboundedEnsemble>(&*spec)) {
        value = ptrmt::pdf_unbounded(p, u->alpha, u->exponents);
    } else {
        value = ptrmt::pdf_bounded(p, std::get<ptrmt::BoundedEnsemble>(*spec).exponents);
    }
    return emit_output(cfg.output, format_double(value) + "\n");
}

int run_verify(const CliConfig& cfg) {
    if (const int code = check_format(cfg, "json"); code != kExitOk) return code;
    auto spec = build_spec(cfg);
    if (!spec) return kExitInvalidConfig;
    if (cfg.count < 1000) {
        std::cerr << "error: count >= 1000 violated\n";
        return kExitInvalidConfig;
    }
    ptrmt::VerifyConfig vcfg;
    vcfg.workers = cfg.workers;
    vcfg.fit_window_quantile = cfg.window_quantile;
    vcfg.paper_formula_identity = cfg.paper_formula;
    const auto reports = ptrmt::verify_ensemble(
        *spec, static_cast<std::size_t>(cfg.count), cfg.seed, vcfg);
    std::string lines;
    bool all_pass = true;
    for (const auto& r : reports) {
        lines += r.to_json().dump() + "\n";
        if (!r.pass) {
            all_pass = false;
            if (!r.detail.empty()) {
                std::cerr << "check '" << r.check << "': " << r.detail << "\n";
            }
        }
    }
    const int io = emit_output(cfg.output, lines);
    if (io != kExitOk) return io;
    return all_pass ? kExitOk : kExitVerificationFailure;
}

// Reads the `sigma` column of a CSV produced by `sample`.
std::optional<std::vector<double>> read_sigma_column(const std::string& path,
                                                     int& exit_code) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "' for reading\n";
        exit_code = kExitIoFailure;
        return std::nullopt;
    }
    std::string header;
    if (!std::getline(in, header)) {
        std::cerr << "error: empty input file\n";
        exit_code = kExitInvalidConfig;
        return std::nullopt;
    }
    int sigma_col = -1;
    {
        std::stringstream ss(header);
        std::string field;
        for (int col = 0; std::getline(ss, field, ','); ++col) {
            if (field == "sigma") sigma_col = col;
        }
    }
    if (sigma_col < 0) {
        std::cerr << "error: no 'sigma' column in '" << path << "'\n";
        exit_code = kExitInvalidConfig;
        return std::nullopt;
    }
    std::vector<double> sigmas;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        for (int col = 0; std::getline(ss, field, ','); ++col) {
            if (col == sigma_col) sigmas.push_back(std::strtod(field.c_str(), nullptr));
        }
    }
    return sigmas;
}

int run_fit(const CliConfig& cfg) {
    if (const int code = check_format(cfg, "json"); code != kExitOk) return code;
    auto spec = build_spec(cfg);
    if (!spec) return kExitInvalidConfig;
    std::vector<double> spacings;
    if (!cfg.input.empty()) {
        int exit_code = kExitOk;
        auto sigmas = read_sigma_column(cfg.input, exit_code);
        if (!sigmas) return exit_code;
        spacings = std::move(*sigmas);
    } else {
        if (!cfg.seed_given) {
            std::cerr << "error: --seed is required when sampling (no implicit default)\n";
            return kExitInvalidConfig;
        }
        if (cfg.count < 0) {
            std::cerr << "error: count >= 0 violated\n";
            return kExitInvalidConfig;
        }
        spacings = ptrmt::sample_batch(*spec, static_cast<std::size_t>(cfg.count),
                                       cfg.seed, cfg.workers)
                       .spacings();
    }
    if (spacings.size() < 100000) {
        std::cerr << "error: need at least 1e5 spacings, have " << spacings.size()
                  << "\n";
        return kExitInsufficientData;
    }
    ptrmt::ExponentFit fit;
    try {
        fit = ptrmt::fit_exponent(spacings, cfg.window_quantile, cfg.bins);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficientData;
    }
    nlohmann::json j{{"nu_hat", fit.nu_hat},
                     {"std_error", fit.std_error},
                     {"window", {fit.window_lo, fit.window_hi}},
                     {"prediction", ptrmt::repulsion_exponent(*spec)},
                     {"alt_nu_hat", fit.alt_nu_hat},
                     {"bins_used", fit.bins_used},
                     {"n", fit.sample_size}};
    return emit_output(cfg.output, j.dump() + "\n");
}

std::string render_hist_svg(const ptrmt::Histogram& hist,
                            const ptrmt::SpacingDensity& density,
                            const std::string& title) {
    const double width = 800.0, height = 520.0;
    const double ml = 64.0, mr = 24.0, mt = 36.0, mb = 48.0;
    const double plot_w = width - ml - mr;
    const double plot_h = height - mt - mb;
    const double x_max = hist.edges.back();

    const int curve_points = 512;
    std::vector<double> cx(curve_points), cy(curve_points);
    double y_max = 0.0;
    for (double d : hist.density) y_max = std::max(y_max, d);
    for (int i = 0; i < curve_points; ++i) {
        cx[i] = x_max * (i + 0.5) / curve_points;
        cy[i] = density(cx[i]);
        y_max = std::max(y_max, cy[i]);
    }
    if (!(y_max > 0.0)) y_max = 1.0;
    y_max *= 1.05;

    auto px = [&](double x) { return ml + plot_w * x / x_max; };
    auto py = [&](double y) { return mt + plot_h * (1.0 - y / y_max); };

    ptrmt::SvgCanvas canvas(width, height);
    canvas.rect(0, 0, width, height, "#ffffff");
    for (std::size_t i = 0; i + 1 < hist.edges.size(); ++i) {
        const double x0 = px(hist.edges[i]);
        const double x1 = px(hist.edges[i + 1]);
        const double y = py(hist.density[i]);
        canvas.rect(x0, y, x1 - x0, mt + plot_h - y, "#9ecae1");
    }
    std::vector<double> sx(curve_points), sy(curve_points);
    for (int i = 0; i < curve_points; ++i) {
        sx[i] = px(cx[i]);
        sy[i] = py(cy[i]);
    }
    canvas.polyline(sx, sy, "#a63603", 1.8);
    canvas.line(ml, mt + plot_h, ml + plot_w, mt + plot_h, "#000000");
    canvas.line(ml, mt, ml, mt + plot_h, "#000000");
    char label[40];
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_max * i / 5.0;
        const double yv = y_max * i / 5.0;
        canvas.line(px(xv), mt + plot_h, px(xv), mt + plot_h + 5, "#000000");
        std::snprintf(label, sizeof(label), "%.3g", xv);
        canvas.text(px(xv), mt + plot_h + 20, label, 11, "middle");
        canvas.line(ml - 5, py(yv), ml, py(yv), "#000000");
        std::snprintf(label, sizeof(label), "%.3g", yv);
        canvas.text(ml - 8, py(yv) + 4, label, 11, "end");
    }
    canvas.text(ml + plot_w / 2, height - 12, "sigma", 12, "middle");
    canvas.text(ml, mt - 12, title, 13);
    return canvas.str();
}

int run_hist(const CliConfig& cfg) {
    if (const int code = check_format(cfg, "svg"); code != kExitOk) return code;
    auto spec = build_spec(cfg);
    if (!spec) return kExitInvalidConfig;
    if (cfg.count < 1 || cfg.bins < 1) {
        std::cerr << "error: count >= 1 and bins >= 1 violated\n";
        return kExitInvalidConfig;
    }
    const auto spacings = ptrmt::sample_batch(
                              *spec, static_cast<std::size_t>(cfg.count), cfg.seed,
                              cfg.workers)
                              .spacings();
    const ptrmt::SpacingDensity density(*spec);
    const double upper = std::isinf(density.support_max())
                             ? 0.0  // use the sample maximum
                             : density.support_max();
    const auto hist = ptrmt::build_histogram(spacings, cfg.bins, upper);

    std::string csv = "bin_lo,bin_hi,density,analytic\n";
    for (std::size_t i = 0; i + 1 < hist.edges.size(); ++i) {
        const double mid = 0.5 * (hist.edges[i] + hist.edges[i + 1]);
        csv += format_double(hist.edges[i]) + "," + format_double(hist.edges[i + 1]) +
               "," + format_double(hist.density[i]) + "," +
               format_double(density(mid)) + "\n";
    }

    std::string base = cfg.output;
    if (base.size() > 4 && base.substr(base.size() - 4) == ".svg") {
        base = base.substr(0, base.size() - 4);
    }
    const std::string title = cfg.ensemble + " spacing density, n=" +
                              std::to_string(cfg.count);
    int code = emit_output(base + ".svg", render_hist_svg(hist, density, title));
    if (code != kExitOk) return code;
    return emit_output(base + ".csv", csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PT-symmetric SU(2)-like 2x2 random matrix ensemble toolkit"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* sample = app.add_subcommand("sample", "Sample ensemble members to CSV");
    add_ensemble_options(sample, cfg);
    sample->add_option("--count", cfg.count, "Number of draws")->required();
    sample->add_option("--seed", cfg.seed, "RNG seed")->required();
    sample->add_option("--workers", cfg.workers, "Worker threads");
    sample->add_option("--format", cfg.format, "Output format (csv)");
    sample->add_option("--output,-o", cfg.output, "Output path (default stdout)");

    auto* pdf = app.add_subcommand("pdf", "Evaluate the matrix-element density");
    add_ensemble_options(pdf, cfg);
    pdf->add_option("--point", cfg.point, "Evaluation point x1 y1 x2 y2")
        ->expected(4)
        ->required();
    pdf->add_option("--output,-o", cfg.output, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run the verification battery");
    add_ensemble_options(verify, cfg);
    verify->add_option("--count", cfg.count, "Samples per check");
    verify->add_option("--seed", cfg.seed, "RNG seed")->required();
    verify->add_option("--workers", cfg.workers, "Worker threads");
    verify->add_option("--window-quantile", cfg.window_quantile,
                       "Exponent-fit window quantile");
    verify->add_flag("--paper-formula", cfg.paper_formula,
                     "Check the printed prefactor as-is (fails for 2m-l+1 >= 3)");
    verify->add_option("--format", cfg.format, "Output format (json)");
    verify->add_option("--output,-o", cfg.output, "Output path (default stdout)");

    auto* fit = app.add_subcommand("fit", "Fit the level-repulsion exponent");
    add_ensemble_options(fit, cfg);
    fit->add_option("--count", cfg.count, "Number of draws (ignored with --input)");
    fit->add_option("--seed", cfg.seed, "RNG seed");
    fit->add_option("--workers", cfg.workers, "Worker threads");
    fit->add_option("--bins", cfg.bins, "Log-spaced bins in the fit window")
        ->default_val(16);
    fit->add_option("--window-quantile", cfg.window_quantile,
                    "Fit window quantile (0, 0.1]");
    fit->add_option("--format", cfg.format, "Output format (json)");
    fit->add_option("--input", cfg.input, "Read spacings from a sample CSV");
    fit->add_option("--output,-o", cfg.output, "Output path (default stdout)");

    auto* hist = app.add_subcommand("hist", "Histogram spacings with density overlay");
    add_ensemble_options(hist, cfg);
    hist->add_option("--count", cfg.count, "Number of draws")->required();
    hist->add_option("--seed", cfg.seed, "RNG seed")->required();
    hist->add_option("--workers", cfg.workers, "Worker threads");
    hist->add_option("--bins", cfg.bins, "Histogram bins");
    hist->add_option("--format", cfg.format, "Output format (svg, with CSV sidecar)");
    hist->add_option("--output,-o", cfg.output, "Output base path (.svg/.csv)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    cfg.seed_given = fit->count("--seed") > 0;
    if (const char* env = std::getenv("PT_RMT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) cfg.workers = static_cast<unsigned>(v);
    }

    try {
        if (sample->parsed()) return run_sample(cfg);
        if (pdf->parsed()) return run_pdf(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (fit->parsed()) return run_fit(cfg);
        if (hist->parsed()) return run_hist(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
    return kExitInvalidConfig;
}
