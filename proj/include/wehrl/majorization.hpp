#pragma once

#include <wehrl/random.hpp>
#include <wehrl/spectra.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wehrl {

// Partial sums of both vectors, sorted non-increasing, are compared with an
// absolute slack of 1e-12. Returns true iff `lambda` is majorized by `xi`.
// Throws ValidationError on a dimension mismatch.
bool majorizes(const Spectrum& xi, const Spectrum& lambda);

struct MajorizationPair {
    Spectrum lower; // majorized vector
    Spectrum upper; // majorizing vector
};

using Permutation = std::vector<std::size_t>;

// lower = sum_k w_k P_k upper, a doubly stochastic image of `upper` (weights
// must be non-negative and sum to one).
MajorizationPair birkhoff_mix(const Spectrum& upper, std::span<const Permutation> perms,
                              std::span<const double> weights);

// upper ~ flat Dirichlet, mixed by 2n random permutations with flat-Dirichlet
// weights.
MajorizationPair random_majorized_pair(std::size_t n, RngSeed seed);

enum class SchurDirection {
    concave, // f(lower) >= f(upper)
    convex,  // f(lower) <= f(upper)
};

struct SchurReport {
    std::string monotone_name;
    std::size_t pairs_tested{0};
    std::size_t violations{0};
    // Smallest observed margin in the expected direction; negative margins
    // below -1e-12 count as violations.
    double worst_slack{0.0};
};

using Monotone = std::function<double(const Spectrum&)>;

// Checks the Schur inequality on `pairs_per_n` generated pairs for every
// dimension in `n_values`. Pair i of dimension n is drawn from
// derive_seed(seed, n, i), so any single pair can be replayed.
SchurReport schur_concavity_suite(const std::string& name, const Monotone& monotone,
                                  std::span<const std::size_t> n_values, std::size_t pairs_per_n,
                                  RngSeed seed, SchurDirection direction = SchurDirection::concave);

// Same check on explicit pairs.
SchurReport schur_check_pairs(const std::string& name, const Monotone& monotone,
                              std::span<const MajorizationPair> pairs,
                              SchurDirection direction = SchurDirection::concave);

} // namespace wehrl
