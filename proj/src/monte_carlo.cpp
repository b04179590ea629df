#include <wehrl/monte_carlo.hpp>

#include <wehrl/errors.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace wehrl {

namespace {
constexpr std::size_t kChunkSize = std::size_t{1} << 15;
}

double McEstimate::sigma_distance(double expected) const {
    const double diff = std::abs(mean - expected);
    const double floor = 1e-12 * std::max(1.0, std::abs(expected));
    return diff / std::max(std_error, floor);
}

void MomentAccumulator::add(double x) noexcept {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
}

void MomentAccumulator::merge(const MomentAccumulator& other) noexcept {
    if (other.count == 0) {
        return;
    }
    if (count == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    const double delta = other.mean - mean;
    mean += delta * nb / n;
    m2 += other.m2 + delta * delta * na * nb / n;
    count += other.count;
}

double MomentAccumulator::variance() const noexcept {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
}

std::vector<MomentAccumulator> run_chunked(std::size_t samples, RngSeed seed,
                                           std::size_t observables,
                                           const VectorSampler& sampler) {
    const std::size_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<std::vector<MomentAccumulator>> partial(
        chunks, std::vector<MomentAccumulator>(observables));

    auto run_chunk = [&](std::size_t c) {
        Engine engine = make_engine(seed, c + 1);
        std::vector<double> draw(observables);
        const std::size_t begin = c * kChunkSize;
        const std::size_t end = std::min(samples, begin + kChunkSize);
        auto& acc = partial[c];
        for (std::size_t s = begin; s < end; ++s) {
            sampler(engine, draw);
            for (std::size_t k = 0; k < observables; ++k) {
                acc[k].add(draw[k]);
            }
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(chunks, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            run_chunk(c);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chunks; c = next++) {
                    run_chunk(c);
                }
            });
        }
    }

    std::vector<MomentAccumulator> total(observables);
    for (const auto& chunk : partial) {
        for (std::size_t k = 0; k < observables; ++k) {
            total[k].merge(chunk[k]);
        }
    }
    return total;
}

McEstimate to_estimate(const MomentAccumulator& acc, RngSeed seed) {
    McEstimate est;
    est.mean = acc.mean;
    est.samples = acc.count;
    est.seed = seed;
    est.std_error = acc.count > 1
                        ? std::sqrt(acc.variance() / static_cast<double>(acc.count))
                        : 0.0;
    return est;
}

McEstimate estimate_mean(std::size_t samples, RngSeed seed,
                         const std::function<double(Engine&)>& sampler,
                         std::size_t min_samples) {
    if (samples < min_samples) {
        throw ConfigError("Monte-Carlo run needs at least " + std::to_string(min_samples) +
                          " samples, got " + std::to_string(samples));
    }
    auto acc = run_chunked(samples, seed, 1, [&](Engine& e, std::span<double> out) {
        out[0] = sampler(e);
    });
    return to_estimate(acc[0], seed);
}

} // namespace wehrl
