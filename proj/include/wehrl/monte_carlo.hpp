#pragma once

#include <wehrl/random.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wehrl {

// Monte-Carlo estimate of a mean: value, standard error of the mean, and the
// run parameters needed to reproduce it.
struct McEstimate {
    double mean{0.0};
    double std_error{0.0};
    std::size_t samples{0};
    RngSeed seed{};

    // |mean - expected| in units of the standard error. An exact estimator
    // (zero standard error) is scored against a 1e-12 relative floor.
    double sigma_distance(double expected) const;
};

// Running mean and second central moment; merges exactly (Chan et al.).
struct MomentAccumulator {
    std::size_t count{0};
    double mean{0.0};
    double m2{0.0};

    void add(double x) noexcept;
    void merge(const MomentAccumulator& other) noexcept;
    double variance() const noexcept;
};

// One draw of `out.size()` correlated observables.
using VectorSampler = std::function<void(Engine&, std::span<double>)>;

// Splits `samples` into fixed-size chunks, each driven by its own substream of
// `seed`, and merges chunk accumulators in chunk order. The result is therefore
// independent of how many worker threads run the chunks.
std::vector<MomentAccumulator> run_chunked(std::size_t samples, RngSeed seed,
                                           std::size_t observables,
                                           const VectorSampler& sampler);

// Scalar convenience wrapper; throws ConfigError when samples < min_samples.
McEstimate estimate_mean(std::size_t samples, RngSeed seed,
                         const std::function<double(Engine&)>& sampler,
                         std::size_t min_samples = 1000);

McEstimate to_estimate(const MomentAccumulator& acc, RngSeed seed);

} // namespace wehrl
