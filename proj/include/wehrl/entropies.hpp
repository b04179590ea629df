#pragma once

#include <wehrl/spectra.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace wehrl {

// Phase space the Husimi function lives on: one copy of CP^{N-1} for a state
// of one system, or the product of two copies for a bipartite pure state.
enum class Partition { mono, bi };

// All entropies are in nats. Functions taking an ambient dimension `n`
// require n == lambda.dim(); the spectral kernel itself only sees the support.

// Wehrl entropy of any pure state of dimension n: sum_{k=2}^n 1/k.
double c_n(std::size_t n);

// Minimal Renyi-Wehrl entropy (1/(1-q)) ln[n! Gamma(q+1) / Gamma(q+n)];
// c_n(n) within 1e-6 of q = 1.
double c_nq(std::size_t n, double q);

// Subentropy Q = -sum_i lambda_i^N ln lambda_i / prod_{j!=i}(lambda_i - lambda_j),
// evaluated as a confluent divided difference of x^N ln x.
double subentropy(const Spectrum& lambda);

double wehrl_entropy_mono(const Spectrum& lambda, std::size_t n);
double wehrl_entropy_bi(const Spectrum& lambda, std::size_t n);

// Wehrl entropy above its pure/separable floor; equals the subentropy.
double entropy_excess(const Spectrum& lambda, std::size_t n, Partition partition);

// Q_q = ln(mu_q) / (1 - q), subentropy at q = 1.
double renyi_subentropy(double q, const Spectrum& lambda);

// Tsallis-type monotone M_q = (mu_q - 1) / (1 - q), subentropy at q = 1.
double rescaled_moment(double q, const Spectrum& lambda);

// Closed-form Husimi moment m_q = P mu_q with P = n! Gamma(q+1)/Gamma(q+n)
// (mono) or P^2 (bi).
double husimi_moment(double q, const Spectrum& lambda, std::size_t n, Partition partition);

// (1/(1-q)) ln m_q; the Wehrl entropy at q = 1.
double renyi_wehrl(double q, const Spectrum& lambda, std::size_t n, Partition partition);

double renyi_entropy(double q, const Spectrum& lambda);
double von_neumann(const Spectrum& lambda);

// -dm_q/dq at q = 1 by a central difference of step h in [1e-6, 1e-3].
double wehrl_via_q_limit(const Spectrum& lambda, std::size_t n, Partition partition, double h);

struct ScanRow {
    double q{0.0};
    double renyi{0.0};            // S_q
    double renyi_sub{0.0};        // Q_q
    double tsallis_moment{0.0};   // M_q
    double renyi_wehrl_mono{0.0}; // S_{W,q}, one system
    double renyi_wehrl_bi{0.0};   // S_{W,q}, bipartite
};

// Shape of the q-dependence on the scanned grid. Informational only: the
// Renyi entropy is known to be non-increasing, while monotonicity and
// concavity of Q_q are open.
struct QShapeDiagnostics {
    bool renyi_nonincreasing{true};
    bool renyi_sub_nondecreasing{true};
    bool renyi_sub_concave{true};
    double max_renyi_increase{0.0};
    double max_renyi_sub_decrease{0.0};
    double max_renyi_sub_convexity{0.0}; // largest slope increase between neighbours
};

struct EntropyReport {
    std::size_t n{0};
    Spectrum spectrum{std::vector<double>{1.0}};
    double von_neumann{0.0};
    double subentropy{0.0};
    double wehrl_mono{0.0};
    double wehrl_bi{0.0};
    double excess{0.0};
    std::vector<ScanRow> scan;
    QShapeDiagnostics diagnostics;
};

// Tabulates every q-dependent quantity on the grid (sorted ascending,
// duplicates dropped) along with the scalar entropies.
EntropyReport q_scan(const Spectrum& lambda, std::span<const double> q_grid);

QShapeDiagnostics q_shape(std::span<const ScanRow> rows);

} // namespace wehrl
