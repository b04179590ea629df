#pragma once

#include <wehrl/monte_carlo.hpp>
#include <wehrl/spectra.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace wehrl {

using StateVector = Eigen::VectorXcd;

// Point of CP^{N-1} in squared-magnitude / phase coordinates:
//     |alpha> = sqrt(1 - sum x_i) |0> + sum_i sqrt(x_i) e^{i phi_i} |i>.
// x_i >= 0 with sum <= 1 + 1e-12 (DomainError otherwise); phases are reduced
// into [0, 2 pi).
class CoherentPoint {
public:
    CoherentPoint(std::vector<double> x, std::vector<double> phi);

    static CoherentPoint origin(std::size_t n);

    std::size_t dim() const noexcept { return x_.size() + 1; }
    const std::vector<double>& x() const noexcept { return x_; }
    const std::vector<double>& phi() const noexcept { return phi_; }

private:
    std::vector<double> x_;
    std::vector<double> phi_;
};

StateVector coherent_state(const CoherentPoint& point);

// <alpha|rho|alpha>
double husimi_mono(const HermitianState& rho, const CoherentPoint& point);

// |<Psi|(alpha_A (x) alpha_B)>|^2 with Psi in its given product basis.
double husimi_bi(const BipartitePureState& psi, const CoherentPoint& a, const CoherentPoint& b);

// Fubini-Study (unitarily invariant) random point: flat-Dirichlet squared
// magnitudes and independent uniform phases.
CoherentPoint sample_fubini_study(std::size_t n, RngSeed seed);

// Monte-Carlo phase-space integrals. The measure has total mass N per factor
// (fixed by the resolution of identity and m_1 = 1), so each estimator is
// N (or N^2) times a plain Fubini-Study sample mean.
McEstimate mc_moment_mono(const HermitianState& rho, double q, std::size_t samples,
                          RngSeed seed);
McEstimate mc_moment_bi(const BipartitePureState& psi, double q, std::size_t samples,
                        RngSeed seed);

// -integral of H ln H, with the integrand taken as 0 where H < 1e-300.
McEstimate mc_wehrl(const HermitianState& rho, std::size_t samples, RngSeed seed);
McEstimate mc_wehrl(const BipartitePureState& psi, std::size_t samples, RngSeed seed);

// Sampled N E[|alpha><alpha|], entrywise with standard errors.
struct IdentityResolution {
    Eigen::MatrixXcd mean;
    Eigen::MatrixXd std_error_re;
    Eigen::MatrixXd std_error_im;
    std::size_t samples{0};

    // Largest entrywise deviation from the identity in standard errors.
    double max_sigma_distance() const;
};

IdentityResolution sample_identity_resolution(std::size_t n, std::size_t samples, RngSeed seed);

} // namespace wehrl
