#include <wehrl/entropies.hpp>
#include <wehrl/errors.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace wehrl;

namespace {

const Spectrum kThreeQuarter({0.75, 0.25});

double flat_maximum(std::size_t n, double q) {
    const double nd = static_cast<double>(n);
    return (std::lgamma(q + nd) - std::lgamma(q + 1.0) - std::lgamma(nd) - q * std::log(nd)) /
           (1.0 - q);
}

} // namespace

TEST(Constants, HarmonicTail) {
    EXPECT_EQ(c_n(1), 0.0);
    EXPECT_DOUBLE_EQ(c_n(2), 0.5);
    EXPECT_DOUBLE_EQ(c_n(4), 0.5 + 1.0 / 3.0 + 0.25);
    EXPECT_NEAR(c_nq(2, 2.0), 0.40546510810816438198, 1e-15);
    EXPECT_NEAR(c_nq(3, 0.5), 0.9400072584914711073, 1e-15);
    EXPECT_NEAR(c_nq(5, 1.0 + 1e-9), c_n(5), 1e-15);
    EXPECT_NEAR(c_nq(5, 1.0 + 1e-4), c_n(5), 1e-4);
    EXPECT_THROW(c_n(0), DomainError);
}

TEST(Subentropy, FrozenValues) {
    EXPECT_NEAR(subentropy(kThreeQuarter), 0.15035553636826721601, 1e-14);
    EXPECT_NEAR(subentropy(Spectrum({0.5, 0.3, 0.2})), 0.24787678364229923781, 1e-14);
    EXPECT_NEAR(subentropy(Spectrum({0.4 + 1e-6, 0.4, 0.2 - 1e-6})), 0.25492000910224308264,
                1e-12);
    EXPECT_NEAR(subentropy(Spectrum({0.01, 0.08, 0.27, 0.64})), 0.2067847512418639694, 1e-14);
    EXPECT_NEAR(subentropy(Spectrum::flat(2)), 0.19314718055994530942, 1e-14);
    EXPECT_NEAR(subentropy(Spectrum::flat(3)), 0.26527895533477635806, 1e-14);
    EXPECT_EQ(subentropy(Spectrum::pure(5)), 0.0);
}

TEST(Subentropy, MatchesEigenvalueFormula) {
    std::mt19937 gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = oracle::random_probabilities(gen, 2 + static_cast<std::size_t>(trial % 5));
        if (oracle::min_gap(p) < 1e-2) {
            continue;
        }
        EXPECT_NEAR(subentropy(Spectrum(p)), oracle::subentropy_eigensum(p), 1e-11);
    }
}

TEST(Subentropy, FlatLimitIsLogMinusHarmonic) {
    for (std::size_t n = 2; n <= 8; ++n) {
        EXPECT_NEAR(subentropy(Spectrum::flat(n)), std::log(static_cast<double>(n)) - c_n(n),
                    1e-13);
    }
}

TEST(Wehrl, FrozenValuesAndIdentities) {
    EXPECT_NEAR(von_neumann(kThreeQuarter), 0.56233514461880835029, 1e-15);
    EXPECT_NEAR(wehrl_entropy_mono(Spectrum::flat(2), 2), std::log(2.0), 1e-14);
    EXPECT_NEAR(wehrl_entropy_bi(Spectrum::flat(2), 2), 1.0 + std::log(2.0) - 0.5, 1e-14);
    EXPECT_NEAR(wehrl_entropy_mono(Spectrum::pure(2), 2), 0.5, 1e-15);
    EXPECT_EQ(entropy_excess(Spectrum::pure(4), 4, Partition::bi), 0.0);
    EXPECT_THROW(wehrl_entropy_mono(kThreeQuarter, 3), ValidationError);
}

TEST(Wehrl, BoundsHoldOnRandomSpectra) {
    std::mt19937 gen(22);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const Spectrum s(oracle::random_probabilities(gen, n));
        const double sn = von_neumann(s);
        const double sw = wehrl_entropy_mono(s, n);
        EXPECT_GE(sw - sn, -1e-10);
        EXPECT_GE(sn + c_n(n) - sw, -1e-10);
        EXPECT_GE(sn - subentropy(s), -1e-10);
        EXPECT_GE(subentropy(s), 0.0);
    }
}

TEST(Wehrl, FiniteDifferenceLimit) {
    for (std::uint64_t k = 0; k < 10; ++k) {
        const std::size_t n = 2 + k % 4;
        const Spectrum s = random_spectrum(n, RngSeed{k + 50});
        EXPECT_NEAR(wehrl_via_q_limit(s, n, Partition::mono, 1e-4), wehrl_entropy_mono(s, n),
                    1e-6);
        EXPECT_NEAR(wehrl_via_q_limit(s, n, Partition::bi, 1e-4), wehrl_entropy_bi(s, n), 1e-6);
    }
    // -dm/dq at q = 1, frozen
    EXPECT_NEAR(wehrl_via_q_limit(kThreeQuarter, 2, Partition::mono, 1e-4),
                0.65035553636826721601, 1e-7);
    EXPECT_THROW(wehrl_via_q_limit(kThreeQuarter, 2, Partition::mono, 0.1), ConfigError);
    EXPECT_THROW(wehrl_via_q_limit(kThreeQuarter, 2, Partition::mono, 1e-8), ConfigError);
}

TEST(Renyi, FrozenValues) {
    EXPECT_NEAR(renyi_entropy(2.0, kThreeQuarter), 0.47000362924573555365, 1e-15);
    EXPECT_NEAR(renyi_subentropy(2.0, kThreeQuarter), 0.20763936477824450162, 1e-14);
    EXPECT_NEAR(renyi_subentropy(2.0, Spectrum::flat(2)), 0.28768207245178092744, 1e-14);
    EXPECT_NEAR(renyi_subentropy(10.0, Spectrum::flat(2)), 0.50373072586678695001, 1e-14);
    EXPECT_NEAR(renyi_subentropy(0.5, kThreeQuarter), 0.095747308941888837128, 1e-14);
    EXPECT_NEAR(rescaled_moment(0.5, kThreeQuarter), 0.098076211353315940291, 1e-14);
    EXPECT_NEAR(renyi_wehrl(2.0, kThreeQuarter, 2, Partition::bi), 1.0185695809945732656,
                1e-14);
}

TEST(Renyi, FlatSpectrumMaximizesSubentropy) {
    std::mt19937 gen(23);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (double q : {0.5, 2.0, 5.0}) {
            const double top = flat_maximum(n, q);
            EXPECT_NEAR(renyi_subentropy(q, Spectrum::flat(n)), top, 1e-12);
            for (int trial = 0; trial < 300; ++trial) {
                const Spectrum s(oracle::random_probabilities(gen, n));
                EXPECT_LE(renyi_subentropy(q, s), top + 1e-10);
            }
        }
    }
}

TEST(Renyi, LimitsInTheOrder) {
    const Spectrum s({0.5, 0.3, 0.2});
    EXPECT_NEAR(renyi_subentropy(1.0 + 1e-4, s), subentropy(s), 1e-4);
    EXPECT_NEAR(renyi_subentropy(1.0 - 1e-4, s), subentropy(s), 1e-4);
    EXPECT_NEAR(rescaled_moment(1.0 + 1e-4, s), subentropy(s), 1e-4);
    EXPECT_NEAR(renyi_entropy(1.0 + 1e-4, s), von_neumann(s), 1e-4);
    EXPECT_LE(renyi_subentropy(0.001, s), 0.01);
    EXPECT_NEAR(renyi_subentropy(1000.0, kThreeQuarter), -std::log(0.75), 1e-2);
    EXPECT_NEAR(renyi_entropy(1000.0, kThreeQuarter), -std::log(0.75), 1e-2);
    for (double q : {0.5, 2.0, 7.0}) {
        EXPECT_NEAR(renyi_entropy(q, Spectrum::flat(2)), std::log(2.0), 1e-14);
        EXPECT_EQ(renyi_subentropy(q, Spectrum::pure(3)), 0.0);
        EXPECT_NEAR(renyi_subentropy(q, s.padded(5)), renyi_subentropy(q, s), 1e-10);
    }
}

TEST(Renyi, ExcessIdentity) {
    for (std::uint64_t k = 0; k < 20; ++k) {
        const std::size_t n = 2 + k % 5;
        const Spectrum s = random_spectrum(n, RngSeed{k + 300});
        for (double q : {0.5, 2.0, 3.7}) {
            const double qq = renyi_subentropy(q, s);
            EXPECT_NEAR(renyi_wehrl(q, s, n, Partition::mono) - c_nq(n, q), qq, 1e-11);
            EXPECT_NEAR(renyi_wehrl(q, s, n, Partition::bi) - 2.0 * c_nq(n, q), qq, 1e-11);
            const double m = husimi_moment(q, s, n, Partition::mono);
            EXPECT_NEAR(renyi_wehrl(q, s, n, Partition::mono), std::log(m) / (1.0 - q), 1e-11);
        }
    }
}

TEST(Renyi, ErrorPaths) {
    EXPECT_THROW(renyi_subentropy(0.0, kThreeQuarter), DomainError);
    EXPECT_THROW(renyi_entropy(-2.0, kThreeQuarter), DomainError);
    EXPECT_THROW(rescaled_moment(INFINITY, kThreeQuarter), DomainError);
    EXPECT_THROW(husimi_moment(2.0, kThreeQuarter, 3, Partition::mono), ValidationError);
}

TEST(QScan, SortsDedupesAndDiagnoses) {
    const std::vector<double> grid{2.0, 0.5, 2.0, 1.0, 10.0};
    const EntropyReport r = q_scan(kThreeQuarter, grid);
    ASSERT_EQ(r.scan.size(), 4u);
    EXPECT_EQ(r.scan.front().q, 0.5);
    EXPECT_EQ(r.scan.back().q, 10.0);
    EXPECT_NEAR(r.scan[1].renyi_sub, r.subentropy, 1e-15);
    EXPECT_NEAR(r.wehrl_bi - r.wehrl_mono, c_n(2), 1e-15);
    EXPECT_TRUE(r.diagnostics.renyi_nonincreasing);
    EXPECT_TRUE(r.diagnostics.renyi_sub_nondecreasing);
    const std::vector<double> bad{1.0, -1.0};
    EXPECT_THROW(q_scan(kThreeQuarter, bad), DomainError);
}

TEST(QScan, ShapeFlagsCatchViolations) {
    std::vector<ScanRow> rows(3);
    rows[0] = {1.0, 0.5, 0.3, 0, 0, 0};
    rows[1] = {2.0, 0.6, 0.2, 0, 0, 0};
    rows[2] = {3.0, 0.4, 0.4, 0, 0, 0};
    const QShapeDiagnostics d = q_shape(rows);
    EXPECT_FALSE(d.renyi_nonincreasing);
    EXPECT_FALSE(d.renyi_sub_nondecreasing);
    EXPECT_FALSE(d.renyi_sub_concave);
    EXPECT_NEAR(d.max_renyi_sub_convexity, 0.3, 1e-15);
}
