#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "homlab/dicke.h"
#include "oracles.h"

using homlab::AngularState;
using homlab::Complex;
using homlab::FockPair;

namespace {

const double kPi = std::numbers::pi;

}  // namespace

TEST(Schwinger, Mapping) {
    EXPECT_EQ(homlab::jm_to_fock(2, 0), (FockPair{1, 1}));
    EXPECT_EQ(homlab::jm_to_fock(1, 1), (FockPair{1, 0}));
    EXPECT_EQ(homlab::jm_to_fock(6, -6), (FockPair{0, 6}));
    EXPECT_THROW(homlab::jm_to_fock(2, 4), std::domain_error);
    EXPECT_THROW(homlab::jm_to_fock(2, 1), std::domain_error);
    EXPECT_THROW(homlab::jm_to_fock(-1, 1), std::domain_error);
}

TEST(WignerD, Examples) {
    for (double theta : {0.0, 0.5, kPi / 3, kPi / 2, 2.8}) {
        EXPECT_NEAR(homlab::wigner_d(2, 0, 0, theta), std::cos(theta), 1e-14);
        EXPECT_NEAR(homlab::wigner_d(1, 1, 1, theta), std::cos(theta / 2), 1e-14);
        EXPECT_NEAR(homlab::wigner_d(0, 0, 0, theta), 1.0, 1e-15);
    }
    EXPECT_THROW(homlab::wigner_d(2, 1, 0, 0.3), std::domain_error);
    EXPECT_THROW(homlab::wigner_d(2, 0, 4, 0.3), std::domain_error);
}

TEST(WignerD, MatchesRecursionOracle) {
    for (double theta : {kPi / 6, kPi / 2, 1.9}) {
        for (int two_j = 0; two_j <= 8; ++two_j) {
            for (int mp = -two_j; mp <= two_j; mp += 2) {
                for (int m = -two_j; m <= two_j; m += 2) {
                    ASSERT_NEAR(homlab::wigner_d(two_j, mp, m, theta),
                                static_cast<double>(oracle::wigner_recursive(two_j, mp, m, theta)), 1e-10)
                        << two_j << " " << mp << " " << m;
                }
            }
        }
    }
}

TEST(WignerD, RowsAreOrthonormal) {
    for (double theta : {0.4, kPi / 2, 2.2}) {
        for (int two_j = 0; two_j <= 20; ++two_j) {
            for (int m1 = -two_j; m1 <= two_j; m1 += 2) {
                for (int m2 = -two_j; m2 <= two_j; m2 += 2) {
                    double dot = 0.0;
                    for (int mp = -two_j; mp <= two_j; mp += 2) {
                        dot += homlab::wigner_d(two_j, mp, m1, theta) * homlab::wigner_d(two_j, mp, m2, theta);
                    }
                    ASSERT_NEAR(dot, m1 == m2 ? 1.0 : 0.0, 1e-12);
                }
            }
        }
    }
}

TEST(AngularState, Construction) {
    const auto d = AngularState::dicke(2, 0);
    EXPECT_EQ(d.amplitude(0), Complex(1.0));
    EXPECT_EQ(d.amplitude(2), Complex(0.0));
    EXPECT_EQ(d.amplitude(1), Complex(0.0));
    EXPECT_THROW(AngularState(2, {1.0, 0.0}), std::domain_error);
    EXPECT_THROW(AngularState(2, {1.0, 1.0, 0.0}), std::domain_error);
}

TEST(AtomicDistribution, CentralChannelVanishes) {
    const auto p = homlab::atomic_distribution(AngularState::dicke(2, 0), kPi / 2);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_LT(p[1], 1e-30);
    const auto half = homlab::atomic_distribution(AngularState::dicke(1, 1), kPi / 2);
    EXPECT_EQ(half.size(), 2u);
}

TEST(AtomicDistribution, IdentityRotation) {
    const AngularState s(4, {0.1, Complex(0, 0.3), 0.5, 0.7, std::sqrt(1 - 0.01 - 0.09 - 0.25 - 0.49)});
    const auto p = homlab::atomic_distribution(s, 0.0);
    for (int i = 0; i < 5; ++i) {
        ASSERT_NEAR(p[static_cast<std::size_t>(i)], std::norm(s.amplitudes()[static_cast<std::size_t>(i)]), 1e-15);
    }
}

TEST(AtomicDistribution, ConservesProbability) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    for (int two_j = 0; two_j <= 12; ++two_j) {
        std::vector<Complex> amps(static_cast<std::size_t>(two_j) + 1);
        double norm = 0.0;
        for (auto &a : amps) {
            a = Complex(gauss(rng), gauss(rng));
            norm += std::norm(a);
        }
        for (auto &a : amps) {
            a /= std::sqrt(norm);
        }
        double total = 0.0;
        for (double v : homlab::atomic_distribution(AngularState(two_j, amps), 1.1)) {
            total += v;
        }
        ASSERT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(AtomicDistribution, OddSupportedStatesRandomized) {
    std::mt19937_64 rng(2718);
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<int> pick_j(1, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const int j = pick_j(rng);
        std::vector<Complex> amps(static_cast<std::size_t>(2 * j) + 1);
        double norm = 0.0;
        for (int i = 0; i <= 2 * j; ++i) {
            // index i is M = i - J, so n = J + M = i
            if (i % 2 == 1) {
                amps[static_cast<std::size_t>(i)] = Complex(gauss(rng), gauss(rng));
                norm += std::norm(amps[static_cast<std::size_t>(i)]);
            }
        }
        for (auto &a : amps) {
            a /= std::sqrt(norm);
        }
        const auto p = homlab::atomic_distribution(AngularState(2 * j, amps), kPi / 2);
        ASSERT_LT(p[static_cast<std::size_t>(j)], 1e-14) << "J=" << j;
    }
}

TEST(AtomicSweep, OddRowsVanish) {
    const auto rows = homlab::atomic_cnl_sweep(0, 6, homlab::kBalanced);
    std::size_t expected = 0;
    for (int j = 0; j <= 6; ++j) {
        expected += static_cast<std::size_t>(2 * j + 1);
    }
    ASSERT_EQ(rows.size(), expected);
    for (const auto &row : rows) {
        const int n = (row.two_j + row.two_m) / 2;
        EXPECT_EQ(row.fock, homlab::jm_to_fock(row.two_j, row.two_m));
        if (n % 2 == 1) {
            EXPECT_LT(row.p_center, 1e-14);
        }
    }
    EXPECT_THROW(homlab::atomic_cnl_sweep(3, 1, homlab::kBalanced), std::domain_error);
}
