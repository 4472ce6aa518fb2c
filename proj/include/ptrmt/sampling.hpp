// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ptrmt/core.hpp"
#include "ptrmt/ensemble.hpp"
#include "ptrmt/rng.hpp"

namespace ptrmt {

/// Gamma(shape, rate) variate via the Marsaglia-Tsang squeeze method, with
/// the shape < 1 boost gamma(a) = gamma(a+1) U^(1/a).  Valid for all
/// shape > 0; mean shape/rate.
double gamma_variate(double shape, double rate, RngStream& rng);

/// Draw from the Gaussian-weighted ensemble density.  Each coordinate with
/// half-exponent k is |x| = sqrt(G), G ~ Gamma(k + 1/2, alpha), followed by
/// one uniform for the sign; coordinate order x1, y1, x2, y2.
MatrixParams sample_unbounded(double alpha, const ExponentTriple& t, RngStream& rng);

/// Draw from the unit-ball ensemble density by Dirichlet composition:
/// (t1..t4, slack) proportional to independent Gamma(alpha_i/2, 1) variates
/// plus a unit-shape slack, x_i = sqrt(t_i).  Exact for all admissible
/// exponents.
MatrixParams sample_bounded(const BoundedExponents& b, RngStream& rng);

struct RejectionStats {
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
};

/// Rejection oracle for sample_bounded: uniform proposals on [0,1]^4 thinned
/// by the power-law density.  Requires every alpha_i >= 1 (bounded density).
MatrixParams sample_bounded_rejection(const BoundedExponents& b, RngStream& rng,
                                      RejectionStats* stats = nullptr);

/// Variant dispatch.
MatrixParams sample(const EnsembleSpec& spec, RngStream& rng);

struct SampleBatch {
    EnsembleSpec spec;
    std::uint64_t seed = 0;
    std::vector<MatrixParams> params;

    std::vector<double> spacings() const;
};

/// Chunk granularity of batch sampling; chunk index doubles as the RNG
/// stream id, so batches are a function of (spec, count, seed) only.
inline constexpr std::size_t kSampleChunkSize = 65536;

/// Sample `count` members deterministically.  Workers only affect wall time:
/// chunk boundaries are fixed by count and each chunk owns its stream.
SampleBatch sample_batch(const EnsembleSpec& spec, std::size_t count,
                         std::uint64_t seed, unsigned workers = 1);

}  // namespace ptrmt
