#pragma once

#include <wehrl/random.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace wehrl {

using ComplexMatrix = Eigen::MatrixXcd;

// Probability vector of eigenvalues or Schmidt coefficients.
//
// Construction clamps entries in [-1e-12, 0) to zero, rejects anything more
// negative, requires the total to be within 1e-8 of one, renormalizes, and
// sorts non-increasing. The stored vector therefore always sums to one and
// its nonzero entries form a prefix.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values);

    static Spectrum flat(std::size_t n);
    static Spectrum pure(std::size_t n);

    std::size_t dim() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double max() const noexcept { return values_.front(); }

    // Nonzero entries (a prefix, since the storage is sorted).
    std::span<const double> support() const noexcept;
    bool is_pure() const noexcept { return support().size() == 1; }

    // Same spectrum embedded in dimension n >= dim() by appending zeros.
    Spectrum padded(std::size_t n) const;

private:
    std::vector<double> values_;
};

// N x N density matrix: Hermitian within 1e-12, unit trace within 1e-10,
// eigenvalues >= -1e-10.
class HermitianState {
public:
    explicit HermitianState(ComplexMatrix entries);

    static HermitianState diagonal(const Spectrum& spectrum);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const ComplexMatrix& matrix() const noexcept { return entries_; }

private:
    ComplexMatrix entries_;
};

// Pure state of an N x N system given by its coefficient matrix C, with
// |Psi> = sum_ij C_ij |i>_A |j>_B. Rectangular inputs are zero-padded to
// square. Norm must be one within 1e-8.
class BipartitePureState {
public:
    explicit BipartitePureState(ComplexMatrix coeffs);

    // Schmidt form sum_i sqrt(lambda_i) |i>|i>.
    static BipartitePureState schmidt_form(const Spectrum& spectrum);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(coeffs_.rows()); }
    const ComplexMatrix& coeffs() const noexcept { return coeffs_; }

    // Reduced state of subsystem A, C C^dagger.
    HermitianState reduced_state() const;

private:
    ComplexMatrix coeffs_;
};

Spectrum eigen_spectrum(const HermitianState& rho);
Spectrum schmidt_spectrum(const BipartitePureState& psi);

// Flat Dirichlet sample on the (n-1)-simplex.
Spectrum random_spectrum(std::size_t n, RngSeed seed);

// Haar-random pure state on C^n (x) C^n from i.i.d. complex Gaussians.
BipartitePureState random_pure_bipartite(std::size_t n, RngSeed seed);

// Haar-random unitary (QR of a Ginibre matrix with phase-fixed R).
ComplexMatrix random_unitary(std::size_t n, RngSeed seed);

} // namespace wehrl
