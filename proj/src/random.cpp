#include <wehrl/random.hpp>

#include <array>

namespace wehrl {

Engine make_engine(RngSeed seed, std::uint64_t stream) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed.value),
        static_cast<std::uint32_t>(seed.value >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32),
    };
    return Engine(seq);
}

RngSeed derive_seed(RngSeed base, std::uint64_t a, std::uint64_t b) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(base.value),
        static_cast<std::uint32_t>(base.value >> 32),
        static_cast<std::uint32_t>(a),
        static_cast<std::uint32_t>(a >> 32),
        static_cast<std::uint32_t>(b),
        static_cast<std::uint32_t>(b >> 32),
        0x5eedu,
    };
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return RngSeed{(static_cast<std::uint64_t>(words[1]) << 32) | words[0]};
}

void sample_flat_dirichlet(Engine& engine, std::span<double> out) {
    std::exponential_distribution<double> exponential(1.0);
    double total = 0.0;
    for (double& x : out) {
        x = exponential(engine);
        total += x;
    }
    for (double& x : out) {
        x /= total;
    }
}

} // namespace wehrl
