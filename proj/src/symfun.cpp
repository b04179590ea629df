#include <wehrl/symfun.hpp>

#include <wehrl/divided_difference.hpp>
#include <wehrl/errors.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace wehrl {

namespace {

constexpr double kEigensumMinGap = 1e-8;
// Eigenvalue-sum results whose terms cancel by more than this factor are
// re-evaluated through the divided difference in the dispatcher.
constexpr long double kEigensumMaxCancellation = 1e3L;
constexpr double kMaxIntegerOrder = 1e6;

bool is_integer_order(double q) {
    return q == std::floor(q) && std::abs(q) <= kMaxIntegerOrder;
}

void require_finite(double q, const char* what) {
    if (!std::isfinite(q)) {
        throw DomainError(std::string(what) + ": q must be finite");
    }
}

void require_positive_order(double q, const char* what) {
    require_finite(q, what);
    if (!(q > 0.0)) {
        throw DomainError(std::string(what) + ": q must be positive, got " + std::to_string(q));
    }
}

struct EigenSum {
    long double value;
    long double magnitude; // sum of |terms|
};

EigenSum eigensum_terms(double q, std::span<const double> nodes) {
    const std::size_t n = nodes.size();
    const long double exponent = static_cast<long double>(q) + static_cast<long double>(n) - 1.0L;
    EigenSum s{0.0L, 0.0L};
    for (std::size_t i = 0; i < n; ++i) {
        const long double li = nodes[i];
        long double denom = 1.0L;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                denom *= li - static_cast<long double>(nodes[j]);
            }
        }
        const long double term = std::pow(li, exponent) / denom;
        s.value += term;
        s.magnitude += std::abs(term);
    }
    return s;
}

double min_gap(std::span<const double> sorted_desc) {
    double gap = INFINITY;
    for (std::size_t i = 1; i < sorted_desc.size(); ++i) {
        gap = std::min(gap, sorted_desc[i - 1] - sorted_desc[i]);
    }
    return gap;
}

// mu on positive nodes sorted non-increasing, q > 0.
double mu_on_nodes(double q, std::span<const double> nodes) {
    if (is_integer_order(q)) {
        return divdiff::complete_homogeneous(nodes, static_cast<unsigned long>(q));
    }
    if (min_gap(nodes) > kEigensumMinGap) {
        const EigenSum s = eigensum_terms(q, nodes);
        if (s.magnitude <= kEigensumMaxCancellation * std::abs(s.value)) {
            return static_cast<double>(s.value);
        }
    }
    return divdiff::power(nodes, q + static_cast<double>(nodes.size()) - 1.0);
}

} // namespace

double mu_eigensum(double q, const Spectrum& lambda) {
    require_finite(q, "mu_eigensum");
    const auto nodes = lambda.support();
    if (min_gap(nodes) <= kEigensumMinGap) {
        throw DegeneracyError(
            "mu_eigensum: spectrum has eigenvalue gaps <= 1e-8; use mu_divided_difference");
    }
    return static_cast<double>(eigensum_terms(q, nodes).value);
}

double mu_homogeneous(double q, const Spectrum& lambda) {
    if (!std::isfinite(q) || q < 0.0 || !is_integer_order(q)) {
        throw DomainError("mu_homogeneous: q must be a non-negative integer, got " +
                          std::to_string(q));
    }
    return divdiff::complete_homogeneous(lambda.values(), static_cast<unsigned long>(q));
}

double mu_divided_difference(double q, const Spectrum& lambda) {
    require_finite(q, "mu_divided_difference");
    const auto nodes = lambda.support();
    const double exponent = q + static_cast<double>(nodes.size()) - 1.0;
    if (exponent < 0.0) {
        throw DomainError("mu_divided_difference: requires q >= 1 - N");
    }
    return divdiff::power(nodes, exponent);
}

double mu(double q, const Spectrum& lambda) {
    require_positive_order(q, "mu");
    const auto nodes = lambda.support();
    const double top = nodes.front();
    if (top == 1.0) {
        return 1.0;
    }
    std::vector<double> scaled(nodes.begin(), nodes.end());
    for (double& x : scaled) {
        x /= top;
    }
    return std::pow(top, q) * mu_on_nodes(q, scaled);
}

double log_mu(double q, const Spectrum& lambda) {
    require_positive_order(q, "log_mu");
    const auto nodes = lambda.support();
    const double top = nodes.front();
    if (top == 1.0) {
        return 0.0;
    }
    std::vector<double> scaled(nodes.begin(), nodes.end());
    for (double& x : scaled) {
        x /= top;
    }
    return q * std::log(top) + std::log(mu_on_nodes(q, scaled));
}

McEstimate mu_simplex_oracle(double q, const Spectrum& lambda, std::size_t samples,
                             RngSeed seed) {
    require_positive_order(q, "mu_simplex_oracle");
    const std::size_t n = lambda.dim();
    const double nd = static_cast<double>(n);
    const double prefactor = std::exp(std::lgamma(q + nd) - std::lgamma(q + 1.0) - std::lgamma(nd));
    const std::vector<double> weights(lambda.values().begin(), lambda.values().end());
    return estimate_mean(samples, seed, [&](Engine& engine) {
        double x[64];
        std::vector<double> heap;
        std::span<double> point;
        if (n <= 64) {
            point = std::span<double>(x, n);
        } else {
            heap.resize(n);
            point = heap;
        }
        sample_flat_dirichlet(engine, point);
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dot += weights[i] * point[i];
        }
        return prefactor * std::pow(dot, q);
    });
}

} // namespace wehrl
