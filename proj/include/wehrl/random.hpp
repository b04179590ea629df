#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace wehrl {

struct RngSeed {
    std::uint64_t value{0};

    friend bool operator==(RngSeed, RngSeed) = default;
};

using Engine = std::mt19937_64;

// Engine for substream `stream` of `seed`. Distinct streams are decorrelated
// through std::seed_seq; the same (seed, stream) always yields the same state.
Engine make_engine(RngSeed seed, std::uint64_t stream = 0);

// Deterministic child seed, used for per-item reproducibility in suites.
RngSeed derive_seed(RngSeed base, std::uint64_t a, std::uint64_t b = 0);

// Fills `out` with a flat-Dirichlet draw (uniform on the simplex) using
// normalized unit exponentials.
void sample_flat_dirichlet(Engine& engine, std::span<double> out);

} // namespace wehrl
