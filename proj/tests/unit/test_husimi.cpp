#include <wehrl/entropies.hpp>
#include <wehrl/errors.hpp>
#include <wehrl/husimi.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace wehrl;

namespace {

BipartitePureState bell() {
    ComplexMatrix c = ComplexMatrix::Zero(2, 2);
    c(0, 0) = c(1, 1) = std::sqrt(0.5);
    return BipartitePureState(c);
}

HermitianState projector(const StateVector& v) {
    return HermitianState(v * v.adjoint());
}

} // namespace

TEST(CoherentPoint, ValidatesCoordinates) {
    EXPECT_THROW(CoherentPoint({-0.1}, {0.0}), DomainError);
    EXPECT_THROW(CoherentPoint({0.7, 0.5}, {0.0, 0.0}), DomainError);
    EXPECT_THROW(CoherentPoint({0.2}, {0.0, 1.0}), ValidationError);
    EXPECT_THROW(CoherentPoint({0.2}, {INFINITY}), DomainError);
    const CoherentPoint p({0.3}, {-0.5});
    EXPECT_GE(p.phi()[0], 0.0);
    EXPECT_LT(p.phi()[0], 2.0 * std::numbers::pi);
    EXPECT_EQ(CoherentPoint::origin(4).dim(), 4u);
}

TEST(CoherentState, NormalizedWithExpectedAmplitudes) {
    const CoherentPoint p({0.2, 0.5}, {1.0, 2.0});
    const StateVector a = coherent_state(p);
    EXPECT_NEAR(a.norm(), 1.0, 1e-15);
    EXPECT_NEAR(std::norm(a(0)), 0.3, 1e-15);
    EXPECT_NEAR(std::norm(a(2)), 0.5, 1e-15);
    EXPECT_NEAR(std::arg(a(1)) - std::arg(a(0)), 1.0, 1e-14);
}

TEST(Husimi, MonoIsOverlapForPureStates) {
    const CoherentPoint ref({0.4, 0.1}, {0.3, 2.2});
    const StateVector psi = coherent_state(ref);
    const HermitianState rho = projector(psi);
    for (int k = 0; k < 20; ++k) {
        const CoherentPoint p = sample_fubini_study(3, RngSeed{static_cast<std::uint64_t>(k)});
        const double direct = std::norm(psi.dot(coherent_state(p)));
        EXPECT_NEAR(husimi_mono(rho, p), direct, 1e-14);
    }
    EXPECT_NEAR(husimi_mono(rho, ref), 1.0, 1e-14);
    EXPECT_THROW(husimi_mono(rho, CoherentPoint::origin(2)), ValidationError);
}

TEST(Husimi, BipartiteBellOverlap) {
    const BipartitePureState psi = bell();
    for (int k = 0; k < 20; ++k) {
        const CoherentPoint a = sample_fubini_study(2, RngSeed{static_cast<std::uint64_t>(k)});
        const CoherentPoint b = sample_fubini_study(2, RngSeed{static_cast<std::uint64_t>(k + 99)});
        const StateVector va = coherent_state(a);
        const StateVector vb = coherent_state(b);
        const double direct = std::norm(va(0) * vb(0) + va(1) * vb(1)) / 2.0;
        EXPECT_NEAR(husimi_bi(psi, a, b), direct, 1e-14);
    }
}

TEST(FubiniStudy, DeterministicAndOnSimplex) {
    const CoherentPoint a = sample_fubini_study(4, RngSeed{5});
    const CoherentPoint b = sample_fubini_study(4, RngSeed{5});
    EXPECT_EQ(a.x(), b.x());
    EXPECT_EQ(a.phi(), b.phi());
    EXPECT_THROW(sample_fubini_study(1, RngSeed{5}), DomainError);
}

TEST(MonteCarlo, MomentsMatchClosedForms) {
    const Spectrum s({0.6, 0.3, 0.1});
    const HermitianState rho = HermitianState::diagonal(s);
    const BipartitePureState psi = BipartitePureState::schmidt_form(s);
    for (double q : {1.0, 2.0, 2.5}) {
        EXPECT_LT(mc_moment_mono(rho, q, 100000, RngSeed{1})
                      .sigma_distance(husimi_moment(q, s, 3, Partition::mono)),
                  4.5);
        EXPECT_LT(mc_moment_bi(psi, q, 100000, RngSeed{2})
                      .sigma_distance(husimi_moment(q, s, 3, Partition::bi)),
                  4.5);
    }
    EXPECT_LT(mc_wehrl(rho, 100000, RngSeed{3}).sigma_distance(wehrl_entropy_mono(s, 3)), 4.5);
    EXPECT_LT(mc_wehrl(psi, 100000, RngSeed{4}).sigma_distance(wehrl_entropy_bi(s, 3)), 4.5);
}

TEST(MonteCarlo, PureStateAnchors) {
    const HermitianState pure = HermitianState::diagonal(Spectrum::pure(2));
    EXPECT_LT(mc_wehrl(pure, 100000, RngSeed{6}).sigma_distance(0.5), 4.5);
    EXPECT_LT(mc_moment_mono(pure, 2.0, 100000, RngSeed{7}).sigma_distance(2.0 / 3.0), 4.5);
    EXPECT_LT(mc_moment_bi(bell(), 2.0, 100000, RngSeed{8}).sigma_distance(1.0 / 3.0), 4.5);
}

TEST(MonteCarlo, ReproducibleAndValidated) {
    const HermitianState rho = HermitianState::diagonal(Spectrum({0.7, 0.3}));
    const McEstimate a = mc_moment_mono(rho, 2.0, 70000, RngSeed{9});
    const McEstimate b = mc_moment_mono(rho, 2.0, 70000, RngSeed{9});
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_EQ(a.samples, 70000u);
    EXPECT_THROW(mc_moment_mono(rho, 2.0, 999, RngSeed{9}), ConfigError);
    EXPECT_THROW(mc_moment_mono(rho, 0.0, 5000, RngSeed{9}), DomainError);
}

TEST(MonteCarlo, ResolutionOfIdentity) {
    for (std::size_t n : {2u, 3u}) {
        const IdentityResolution r = sample_identity_resolution(n, 100000, RngSeed{n});
        EXPECT_LT(r.max_sigma_distance(), 5.0);
        EXPECT_NEAR(r.mean.trace().real(), static_cast<double>(n), 1e-12);
    }
}
