#include <wehrl/husimi.hpp>

#include <wehrl/errors.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace wehrl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSimplexTolerance = 1e-12;
constexpr double kTinyHusimi = 1e-300;
constexpr std::size_t kMinSamples = 1000;

void require_samples(std::size_t samples) {
    if (samples < kMinSamples) {
        throw ConfigError("Monte-Carlo run needs at least 1000 samples, got " +
                          std::to_string(samples));
    }
}

void require_order(double q) {
    if (!std::isfinite(q) || !(q > 0.0)) {
        throw DomainError("Husimi moment: q must be positive and finite");
    }
}

// Fubini-Study draw written straight into an amplitude vector.
void draw_coherent(Engine& engine, StateVector& out, std::vector<double>& weights) {
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    sample_flat_dirichlet(engine, weights);
    out[0] = std::sqrt(weights[0]);
    for (Eigen::Index i = 1; i < out.size(); ++i) {
        out[i] = std::polar(std::sqrt(weights[static_cast<std::size_t>(i)]), phase(engine));
    }
}

double husimi_value(const ComplexMatrix& rho, const StateVector& alpha) {
    return std::clamp(alpha.dot(rho * alpha).real(), 0.0, 1.0);
}

double husimi_value_bi(const ComplexMatrix& c, const StateVector& a, const StateVector& b) {
    // <Psi|a (x) b> = sum_ij conj(C_ij) a_i b_j
    const std::complex<double> overlap = (a.transpose() * c.conjugate() * b).value();
    return std::min(std::norm(overlap), 1.0);
}

double entropy_density(double h) { return h < kTinyHusimi ? 0.0 : -h * std::log(h); }

// Runs `integrand(H)` over the single-system phase space.
template <class Integrand>
McEstimate integrate_mono(const HermitianState& rho, std::size_t samples, RngSeed seed,
                          Integrand integrand) {
    require_samples(samples);
    const std::size_t n = rho.dim();
    const double mass = static_cast<double>(n);
    const ComplexMatrix& m = rho.matrix();
    return estimate_mean(samples, seed, [&](Engine& engine) {
        thread_local StateVector alpha;
        thread_local std::vector<double> weights;
        alpha.resize(static_cast<Eigen::Index>(n));
        weights.resize(n);
        draw_coherent(engine, alpha, weights);
        return mass * integrand(husimi_value(m, alpha));
    });
}

template <class Integrand>
McEstimate integrate_bi(const BipartitePureState& psi, std::size_t samples, RngSeed seed,
                        Integrand integrand) {
    require_samples(samples);
    const std::size_t n = psi.dim();
    const double mass = static_cast<double>(n) * static_cast<double>(n);
    const ComplexMatrix& c = psi.coeffs();
    return estimate_mean(samples, seed, [&](Engine& engine) {
        thread_local StateVector a;
        thread_local StateVector b;
        thread_local std::vector<double> weights;
        a.resize(static_cast<Eigen::Index>(n));
        b.resize(static_cast<Eigen::Index>(n));
        weights.resize(n);
        draw_coherent(engine, a, weights);
        draw_coherent(engine, b, weights);
        return mass * integrand(husimi_value_bi(c, a, b));
    });
}

} // namespace

CoherentPoint::CoherentPoint(std::vector<double> x, std::vector<double> phi)
    : x_(std::move(x)), phi_(std::move(phi)) {
    if (x_.size() != phi_.size()) {
        throw ValidationError("CoherentPoint: x and phi must have equal length");
    }
    double total = 0.0;
    for (double xi : x_) {
        if (!std::isfinite(xi) || xi < 0.0) {
            throw DomainError("CoherentPoint: coordinates must be non-negative");
        }
        total += xi;
    }
    if (total > 1.0 + kSimplexTolerance) {
        throw DomainError("CoherentPoint: coordinates sum to " + std::to_string(total) +
                          " > 1");
    }
    for (double& p : phi_) {
        if (!std::isfinite(p)) {
            throw DomainError("CoherentPoint: phases must be finite");
        }
        p = std::fmod(p, kTwoPi);
        if (p < 0.0) {
            p += kTwoPi;
        }
        if (p >= kTwoPi) {
            p = 0.0;
        }
    }
}

CoherentPoint CoherentPoint::origin(std::size_t n) {
    if (n == 0) {
        throw DomainError("CoherentPoint::origin: n must be positive");
    }
    return CoherentPoint(std::vector<double>(n - 1, 0.0), std::vector<double>(n - 1, 0.0));
}

StateVector coherent_state(const CoherentPoint& point) {
    const std::size_t n = point.dim();
    StateVector alpha(static_cast<Eigen::Index>(n));
    double total = 0.0;
    for (double xi : point.x()) {
        total += xi;
    }
    alpha[0] = std::sqrt(std::max(0.0, 1.0 - total));
    for (std::size_t i = 1; i < n; ++i) {
        alpha[static_cast<Eigen::Index>(i)] =
            std::polar(std::sqrt(point.x()[i - 1]), point.phi()[i - 1]);
    }
    return alpha;
}

double husimi_mono(const HermitianState& rho, const CoherentPoint& point) {
    if (rho.dim() != point.dim()) {
        throw ValidationError("husimi_mono: state and coherent point dimensions differ");
    }
    return husimi_value(rho.matrix(), coherent_state(point));
}

double husimi_bi(const BipartitePureState& psi, const CoherentPoint& a, const CoherentPoint& b) {
    if (psi.dim() != a.dim() || psi.dim() != b.dim()) {
        throw ValidationError("husimi_bi: state and coherent point dimensions differ");
    }
    return husimi_value_bi(psi.coeffs(), coherent_state(a), coherent_state(b));
}

CoherentPoint sample_fubini_study(std::size_t n, RngSeed seed) {
    if (n < 2) {
        throw DomainError("sample_fubini_study: n must be at least 2");
    }
    Engine engine = make_engine(seed);
    std::vector<double> weights(n);
    sample_flat_dirichlet(engine, weights);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    std::vector<double> phi(n - 1);
    for (double& p : phi) {
        p = phase(engine);
    }
    return CoherentPoint(std::vector<double>(weights.begin() + 1, weights.end()), std::move(phi));
}

McEstimate mc_moment_mono(const HermitianState& rho, double q, std::size_t samples,
                          RngSeed seed) {
    require_order(q);
    return integrate_mono(rho, samples, seed, [q](double h) { return std::pow(h, q); });
}

McEstimate mc_moment_bi(const BipartitePureState& psi, double q, std::size_t samples,
                        RngSeed seed) {
    require_order(q);
    return integrate_bi(psi, samples, seed, [q](double h) { return std::pow(h, q); });
}

McEstimate mc_wehrl(const HermitianState& rho, std::size_t samples, RngSeed seed) {
    return integrate_mono(rho, samples, seed, entropy_density);
}

McEstimate mc_wehrl(const BipartitePureState& psi, std::size_t samples, RngSeed seed) {
    return integrate_bi(psi, samples, seed, entropy_density);
}

double IdentityResolution::max_sigma_distance() const {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < mean.rows(); ++i) {
        for (Eigen::Index j = 0; j < mean.cols(); ++j) {
            const double target = i == j ? 1.0 : 0.0;
            const double re = std::abs(mean(i, j).real() - target);
            const double im = std::abs(mean(i, j).imag());
            worst = std::max(worst, re / std::max(std_error_re(i, j), 1e-12));
            worst = std::max(worst, im / std::max(std_error_im(i, j), 1e-12));
        }
    }
    return worst;
}

IdentityResolution sample_identity_resolution(std::size_t n, std::size_t samples,
                                              RngSeed seed) {
    if (n < 2) {
        throw DomainError("sample_identity_resolution: n must be at least 2");
    }
    require_samples(samples);
    const double mass = static_cast<double>(n);
    // Observables: re and im of every entry of N |alpha><alpha|, row-major.
    const std::size_t entries = n * n;
    auto acc = run_chunked(samples, seed, 2 * entries, [n, mass, entries](Engine& engine,
                                                                          std::span<double> out) {
        thread_local StateVector alpha;
        thread_local std::vector<double> weights;
        alpha.resize(static_cast<Eigen::Index>(n));
        weights.resize(n);
        draw_coherent(engine, alpha, weights);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::complex<double> v = mass * alpha[static_cast<Eigen::Index>(i)] *
                                               std::conj(alpha[static_cast<Eigen::Index>(j)]);
                out[i * n + j] = v.real();
                out[entries + i * n + j] = v.imag();
            }
        }
    });

    IdentityResolution result;
    const auto dim = static_cast<Eigen::Index>(n);
    result.mean.resize(dim, dim);
    result.std_error_re.resize(dim, dim);
    result.std_error_im.resize(dim, dim);
    result.samples = samples;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const McEstimate re = to_estimate(acc[i * n + j], seed);
            const McEstimate im = to_estimate(acc[entries + i * n + j], seed);
            const auto r = static_cast<Eigen::Index>(i);
            const auto c = static_cast<Eigen::Index>(j);
            result.mean(r, c) = {re.mean, im.mean};
            result.std_error_re(r, c) = re.std_error;
            result.std_error_im(r, c) = im.std_error;
        }
    }
    return result;
}

} // namespace wehrl
