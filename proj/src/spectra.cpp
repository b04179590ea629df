#include <wehrl/spectra.hpp>

#include <wehrl/errors.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <string>

namespace wehrl {

namespace {

constexpr double kClampTolerance = 1e-12;
constexpr double kSumTolerance = 1e-8;
constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
constexpr double kPositivityTolerance = 1e-10;
constexpr double kNormTolerance = 1e-8;

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError(std::string(what) + ": matrix must be square and non-empty");
    }
    if (!m.allFinite()) {
        throw ValidationError(std::string(what) + ": entries must be finite");
    }
}

// Sorted non-increasing eigenvalues with [-1e-10, 0) clamped to zero.
std::vector<double> clamped_eigenvalues(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ValidationError("eigen decomposition failed");
    }
    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<double> values(ev.data(), ev.data() + ev.size());
    for (double& v : values) {
        if (v < -kPositivityTolerance) {
            throw PositivityError("density matrix has eigenvalue " + std::to_string(v) +
                                  " below -1e-10");
        }
        v = std::max(v, 0.0);
    }
    return values;
}

} // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("Spectrum: at least one entry required");
    }
    for (double& v : values_) {
        if (!std::isfinite(v)) {
            throw ValidationError("Spectrum: entries must be finite");
        }
        if (v < -kClampTolerance) {
            throw ValidationError("Spectrum: negative entry " + std::to_string(v));
        }
        v = std::max(v, 0.0);
    }
    const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw ValidationError("Spectrum: entries sum to " + std::to_string(total) +
                              ", expected 1");
    }
    for (double& v : values_) {
        v /= total;
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

Spectrum Spectrum::flat(std::size_t n) {
    if (n == 0) {
        throw DomainError("Spectrum::flat: n must be positive");
    }
    return Spectrum(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Spectrum Spectrum::pure(std::size_t n) {
    if (n == 0) {
        throw DomainError("Spectrum::pure: n must be positive");
    }
    std::vector<double> v(n, 0.0);
    v[0] = 1.0;
    return Spectrum(std::move(v));
}

std::span<const double> Spectrum::support() const noexcept {
    const auto end = std::find(values_.begin(), values_.end(), 0.0);
    return {values_.data(), static_cast<std::size_t>(end - values_.begin())};
}

Spectrum Spectrum::padded(std::size_t n) const {
    if (n < values_.size()) {
        throw ValidationError("Spectrum::padded: cannot shrink dimension");
    }
    std::vector<double> v = values_;
    v.resize(n, 0.0);
    return Spectrum(std::move(v));
}

HermitianState::HermitianState(ComplexMatrix entries) : entries_(std::move(entries)) {
    require_square(entries_, "HermitianState");
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) {
        throw ValidationError("HermitianState: not Hermitian (max deviation " +
                              std::to_string(asym) + ")");
    }
    const std::complex<double> trace = entries_.trace();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        throw ValidationError("HermitianState: trace " + std::to_string(trace.real()) +
                              " differs from 1");
    }
    clamped_eigenvalues(entries_);
}

HermitianState HermitianState::diagonal(const Spectrum& spectrum) {
    const auto v = spectrum.values();
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(v.size()),
                                          static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
    }
    return HermitianState(std::move(m));
}

BipartitePureState::BipartitePureState(ComplexMatrix coeffs) {
    if (coeffs.size() == 0) {
        throw ValidationError("BipartitePureState: empty coefficient matrix");
    }
    if (!coeffs.allFinite()) {
        throw ValidationError("BipartitePureState: entries must be finite");
    }
    const Eigen::Index n = std::max(coeffs.rows(), coeffs.cols());
    coeffs_ = ComplexMatrix::Zero(n, n);
    coeffs_.topLeftCorner(coeffs.rows(), coeffs.cols()) = coeffs;
    const double norm2 = coeffs_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw ValidationError("BipartitePureState: squared norm " + std::to_string(norm2) +
                              " differs from 1");
    }
}

BipartitePureState BipartitePureState::schmidt_form(const Spectrum& spectrum) {
    const auto v = spectrum.values();
    const auto n = static_cast<Eigen::Index>(v.size());
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        c(i, i) = std::sqrt(v[static_cast<std::size_t>(i)]);
    }
    return BipartitePureState(std::move(c));
}

HermitianState BipartitePureState::reduced_state() const {
    ComplexMatrix rho = coeffs_ * coeffs_.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return HermitianState(std::move(rho));
}

Spectrum eigen_spectrum(const HermitianState& rho) {
    return Spectrum(clamped_eigenvalues(rho.matrix()));
}

Spectrum schmidt_spectrum(const BipartitePureState& psi) {
    const ComplexMatrix& c = psi.coeffs();
    ComplexMatrix gram = c * c.adjoint();
    gram = 0.5 * (gram + gram.adjoint()).eval();
    std::vector<double> values = clamped_eigenvalues(gram);
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    for (double& v : values) {
        v /= total;
    }
    return Spectrum(std::move(values));
}

Spectrum random_spectrum(std::size_t n, RngSeed seed) {
    if (n == 0) {
        throw DomainError("random_spectrum: n must be positive");
    }
    Engine engine = make_engine(seed);
    std::vector<double> values(n);
    sample_flat_dirichlet(engine, values);
    return Spectrum(std::move(values));
}

namespace {

ComplexMatrix ginibre(std::size_t n, Engine& engine) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto dim = static_cast<Eigen::Index>(n);
    ComplexMatrix g(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = normal(engine);
            const double im = normal(engine);
            g(i, j) = {re, im};
        }
    }
    return g;
}

} // namespace

BipartitePureState random_pure_bipartite(std::size_t n, RngSeed seed) {
    if (n == 0) {
        throw DomainError("random_pure_bipartite: n must be positive");
    }
    Engine engine = make_engine(seed);
    ComplexMatrix c = ginibre(n, engine);
    c /= c.norm();
    return BipartitePureState(std::move(c));
}

ComplexMatrix random_unitary(std::size_t n, RngSeed seed) {
    if (n == 0) {
        throw DomainError("random_unitary: n must be positive");
    }
    Engine engine = make_engine(seed);
    const ComplexMatrix g = ginibre(n, engine);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const std::complex<double> d = r(j, j);
        if (std::abs(d) > 0.0) {
            q.col(j) *= d / std::abs(d);
        }
    }
    return q;
}

} // namespace wehrl
