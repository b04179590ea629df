#include <wehrl/majorization.hpp>

#include <wehrl/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wehrl {

namespace {

constexpr double kPartialSumSlack = 1e-12;
constexpr double kViolationSlack = -1e-12;

void accumulate_pair(SchurReport& report, const Monotone& monotone, const MajorizationPair& pair,
                     SchurDirection direction) {
    const double lower = monotone(pair.lower);
    const double upper = monotone(pair.upper);
    const double slack = direction == SchurDirection::concave ? lower - upper : upper - lower;
    if (report.pairs_tested == 0 || slack < report.worst_slack) {
        report.worst_slack = slack;
    }
    ++report.pairs_tested;
    if (!(slack >= kViolationSlack)) {
        ++report.violations;
    }
}

} // namespace

bool majorizes(const Spectrum& xi, const Spectrum& lambda) {
    if (xi.dim() != lambda.dim()) {
        throw ValidationError("majorizes: spectra have different dimensions");
    }
    double upper = 0.0;
    double lower = 0.0;
    for (std::size_t k = 0; k < xi.dim(); ++k) {
        upper += xi[k];
        lower += lambda[k];
        if (lower > upper + kPartialSumSlack) {
            return false;
        }
    }
    return true;
}

MajorizationPair birkhoff_mix(const Spectrum& upper, std::span<const Permutation> perms,
                              std::span<const double> weights) {
    const std::size_t n = upper.dim();
    if (perms.size() != weights.size() || perms.empty()) {
        throw ValidationError("birkhoff_mix: need one weight per permutation");
    }
    std::vector<double> mixed(n, 0.0);
    for (std::size_t k = 0; k < perms.size(); ++k) {
        const Permutation& p = perms[k];
        if (p.size() != n) {
            throw ValidationError("birkhoff_mix: permutation length differs from dimension");
        }
        if (weights[k] < 0.0) {
            throw ValidationError("birkhoff_mix: weights must be non-negative");
        }
        for (std::size_t i = 0; i < n; ++i) {
            mixed[i] += weights[k] * upper[p[i]];
        }
    }
    return MajorizationPair{Spectrum(std::move(mixed)), upper};
}

MajorizationPair random_majorized_pair(std::size_t n, RngSeed seed) {
    if (n < 2) {
        throw DomainError("random_majorized_pair: n must be at least 2");
    }
    Engine engine = make_engine(seed);
    std::vector<double> xi(n);
    sample_flat_dirichlet(engine, xi);

    std::vector<Permutation> perms(2 * n, Permutation(n));
    for (auto& p : perms) {
        std::iota(p.begin(), p.end(), std::size_t{0});
        std::shuffle(p.begin(), p.end(), engine);
    }
    std::vector<double> weights(perms.size());
    sample_flat_dirichlet(engine, weights);
    return birkhoff_mix(Spectrum(std::move(xi)), perms, weights);
}

SchurReport schur_check_pairs(const std::string& name, const Monotone& monotone,
                              std::span<const MajorizationPair> pairs, SchurDirection direction) {
    SchurReport report;
    report.monotone_name = name;
    for (const auto& pair : pairs) {
        accumulate_pair(report, monotone, pair, direction);
    }
    return report;
}

SchurReport schur_concavity_suite(const std::string& name, const Monotone& monotone,
                                  std::span<const std::size_t> n_values, std::size_t pairs_per_n,
                                  RngSeed seed, SchurDirection direction) {
    SchurReport report;
    report.monotone_name = name;
    for (std::size_t n : n_values) {
        for (std::size_t i = 0; i < pairs_per_n; ++i) {
            const auto pair = random_majorized_pair(n, derive_seed(seed, n, i));
            accumulate_pair(report, monotone, pair, direction);
        }
    }
    return report;
}

} // namespace wehrl
