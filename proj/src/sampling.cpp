// SPDX-License-Identifier: Apache-2.0
#include "ptrmt/sampling.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ptrmt {

namespace {

// Marsaglia-Tsang for shape >= 1.
double gamma_variate_ge1(double shape, RngStream& rng) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;  // squeeze
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double gamma_variate(double shape, double rate, RngStream& rng) {
    if (!(shape > 0.0 && std::isfinite(shape)))
        throw std::invalid_argument("gamma_variate: shape > 0 violated");
    if (!(rate > 0.0 && std::isfinite(rate)))
        throw std::invalid_argument("gamma_variate: rate > 0 violated");
    if (shape < 1.0) {
        const double g = gamma_variate_ge1(shape + 1.0, rng);
        return g * std::pow(rng.uniform(), 1.0 / shape) / rate;
    }
    return gamma_variate_ge1(shape, rng) / rate;
}

namespace {

// |x| = sqrt(G) with G ~ Gamma(k + 1/2, alpha) gives the coordinate density
// proportional to x^2k exp(-alpha x^2); one uniform decides the sign.
double unbounded_coordinate(int half_exponent, double alpha, RngStream& rng) {
    const double g = gamma_variate(half_exponent + 0.5, alpha, rng);
    const double magnitude = std::sqrt(g);
    return rng.uniform() < 0.5 ? -magnitude : magnitude;
}

}  // namespace

MatrixParams sample_unbounded(double alpha, const ExponentTriple& t, RngStream& rng) {
    require_valid(t);
    if (!(std::isfinite(alpha) && alpha > 0.0))
        throw std::invalid_argument("alpha > 0 violated");
    const double x1 = unbounded_coordinate(t.l, alpha, rng);
    const double y1 = unbounded_coordinate(t.m - t.l, alpha, rng);
    const double x2 = unbounded_coordinate(t.m - t.n, alpha, rng);
    const double y2 = unbounded_coordinate(t.n, alpha, rng);
    return MatrixParams(x1, y1, x2, y2);
}

MatrixParams sample_bounded(const BoundedExponents& b, RngStream& rng) {
    require_valid(b);
    const auto al = b.alphas();
    double g[4];
    double total = 0.0;
    for (int i = 0; i < 4; ++i) {
        g[i] = gamma_variate(0.5 * al[i], 1.0, rng);
        total += g[i];
    }
    total += gamma_variate(1.0, 1.0, rng);  // slack keeps the point inside V
    return MatrixParams(std::sqrt(g[0] / total), std::sqrt(g[2] / total),
                        std::sqrt(g[1] / total), std::sqrt(g[3] / total));
}

MatrixParams sample_bounded_rejection(const BoundedExponents& b, RngStream& rng,
                                      RejectionStats* stats) {
    require_valid(b);
    const auto al = b.alphas();
    for (double ai : al) {
        if (ai < 1.0)
            throw std::invalid_argument("alpha_i >= 1 violated (rejection oracle undefined)");
    }
    for (;;) {
        if (stats) ++stats->proposals;
        const double x1 = rng.uniform();
        const double x2 = rng.uniform();
        const double x3 = rng.uniform();
        const double x4 = rng.uniform();
        const double u = rng.uniform();
        if (x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 > 1.0) continue;
        const double w = std::pow(x1, al[0] - 1.0) * std::pow(x2, al[1] - 1.0) *
                         std::pow(x3, al[2] - 1.0) * std::pow(x4, al[3] - 1.0);
        if (u < w) {
            if (stats) ++stats->accepted;
            return MatrixParams(x1, x3, x2, x4);
        }
    }
}

MatrixParams sample(const EnsembleSpec& spec, RngStream& rng) {
    if (const auto* u = std::get_if<UnboundedEnsemble>(&spec))
        return sample_unbounded(u->alpha, u->exponents, rng);
    return sample_bounded(std::get<BoundedEnsemble>(spec).exponents, rng);
}

std::vector<double> SampleBatch::spacings() const {
    std::vector<double> out;
    out.reserve(params.size());
    for (const auto& p : params) out.push_back(spacing(p));
    return out;
}

SampleBatch sample_batch(const EnsembleSpec& spec, std::size_t count,
                         std::uint64_t seed, unsigned workers) {
    require_valid(spec);
    SampleBatch batch{spec, seed, std::vector<MatrixParams>(count)};
    if (count == 0) return batch;

    const std::size_t chunks = (count + kSampleChunkSize - 1) / kSampleChunkSize;
    std::atomic<std::size_t> next_chunk{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            RngStream rng(seed, static_cast<std::uint64_t>(c));
            const std::size_t begin = c * kSampleChunkSize;
            const std::size_t end = std::min(begin + kSampleChunkSize, count);
            for (std::size_t i = begin; i < end; ++i) {
                batch.params[i] = sample(spec, rng);
            }
        }
    };

    if (workers <= 1 || chunks == 1) {
        worker();
        return batch;
    }
    std::vector<std::thread> pool;
    const unsigned n_threads = static_cast<unsigned>(
        std::min<std::size_t>(workers, chunks));
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return batch;
}

}  // namespace ptrmt
