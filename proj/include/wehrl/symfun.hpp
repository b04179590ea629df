#pragma once

#include <wehrl/monte_carlo.hpp>
#include <wehrl/spectra.hpp>

#include <cstddef>

namespace wehrl {

// The spectral kernel
//     mu_{q,N}(lambda) = sum_i lambda_i^{q+N-1} / prod_{j!=i} (lambda_i - lambda_j),
// the N-point divided difference of x^{q+N-1} over the nonzero eigenvalues.
// At integer q it is the complete homogeneous symmetric polynomial h_q.
// Every evaluator strips zero entries first; N is the support size.

// Literal eigenvalue sum. Requires all pairwise gaps > 1e-8 (DegeneracyError
// otherwise). Admits any finite q, including q = -1 where the sum vanishes.
double mu_eigensum(double q, const Spectrum& lambda);

// h_q(lambda) for integer q >= 0; exact at degenerate and zero entries.
double mu_homogeneous(double q, const Spectrum& lambda);

// Confluent divided difference; valid on degenerate spectra. Requires
// q + N - 1 >= 0.
double mu_divided_difference(double q, const Spectrum& lambda);

// Dispatcher for q > 0: integer q uses h_q, well-conditioned separated
// spectra the eigenvalue sum, everything else the divided difference.
double mu(double q, const Spectrum& lambda);

// ln mu_{q,N}, evaluated on nodes scaled by max(lambda) so that very large q
// neither underflows nor overflows.
double log_mu(double q, const Spectrum& lambda);

// Integral oracle
//     mu_{q,N} = Gamma(q+N)/Gamma(q+1) * integral over the simplex of (lambda.x)^q,
// estimated with flat-Dirichlet samples of x (the simplex volume 1/(N-1)! is
// folded into the prefactor). Uses all N entries, zeros included.
McEstimate mu_simplex_oracle(double q, const Spectrum& lambda, std::size_t samples,
                             RngSeed seed);

} // namespace wehrl
