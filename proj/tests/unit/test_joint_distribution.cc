#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "homlab/joint_distribution.h"
#include "oracles.h"
#include "random_states.h"

using homlab::BeamSplitterSetting;
using homlab::BigRational;
using homlab::Complex;
using homlab::JointDistribution;
using homlab::kBalanced;

using oracle::random_mixed;
using oracle::random_pure;

namespace {

const double kPi = std::numbers::pi;

double max_diff(const JointDistribution &a, const JointDistribution &b) {
    EXPECT_EQ(a.grid_max, b.grid_max);
    double out = 0.0;
    for (std::size_t i = 0; i < a.grid.size(); ++i) {
        out = std::max(out, std::abs(a.grid[i] - b.grid[i]));
    }
    return out;
}

JointDistribution general_of(const homlab::MixedState &a, const homlab::MixedState &b, const BeamSplitterSetting &bs,
                             int grid_max) {
    return homlab::joint_general(homlab::BipartiteDensity::product(a, b), bs, grid_max);
}

double energy(const JointDistribution &d) {
    double e = 0.0;
    for (int a = 0; a <= d.grid_max; ++a) {
        for (int b = 0; b <= d.grid_max; ++b) {
            e += (a + b) * d.at(a, b);
        }
    }
    return e;
}

}  // namespace

TEST(JointFsFs, HongOuMandel) {
    const auto d = homlab::joint_fs_fs(1, 1, kBalanced);
    EXPECT_EQ(d.grid_max, 2);
    EXPECT_EQ(d.at(1, 1), 0.0);
    EXPECT_NEAR(d.at(2, 0), 0.5, 1e-15);
    EXPECT_NEAR(d.at(0, 2), 0.5, 1e-15);
    EXPECT_NEAR(d.total_mass, 1.0, 1e-15);
    EXPECT_THROW(homlab::joint_fs_fs(1, 1, kBalanced, 1), std::domain_error);
}

TEST(JointFsFs, VacuumInBIsBinomial) {
    const auto bs = BeamSplitterSetting::angle(1.1);
    const double t = std::pow(std::cos(0.55), 2);
    const auto d = homlab::joint_fs_fs(6, 0, bs);
    for (int k = 0; k <= 6; ++k) {
        const double expected = homlab::binomial_double(6, k) * std::pow(t, k) * std::pow(1 - t, 6 - k);
        ASSERT_NEAR(d.at(k, 6 - k), expected, 1e-14);
    }
}

TEST(JointFsFs, OddTotalCentre) {
    const auto d = homlab::joint_fs_fs(3, 3, kBalanced);
    EXPECT_EQ(d.at(3, 3), 0.0);
    double sum = 0.0;
    for (double v : d.grid) {
        sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(JointFsPure, CoherentCentralNodalLine) {
    const auto d = homlab::joint_fs_pure(1, homlab::coherent(3.0), kBalanced);
    for (double v : d.diagonal()) {
        ASSERT_LT(v, 1e-14);
    }
    EXPECT_NEAR(d.total_mass, 1.0, 1e-9);
}

TEST(JointFsPure, VacuumInAIsPoissonProduct) {
    const double beta = 1.8;
    const auto bs = BeamSplitterSetting::exact(BigRational(3, 4));
    const auto source = homlab::coherent(beta);
    const auto d = homlab::joint_fs_pure(0, source, bs);
    for (int a = 0; a <= 12; ++a) {
        for (int b = 0; a + b <= source.cutoff(); ++b) {
            ASSERT_NEAR(d.at(a, b), oracle::poisson_split(a, b, beta * beta, 0.75), 1e-13);
        }
    }
}

TEST(JointFsPure, PhotonNumberFloor) {
    const auto d = homlab::joint_fs_pure(2, homlab::coherent(std::sqrt(3.0)), kBalanced);
    EXPECT_EQ(d.at(0, 0), 0.0);
    EXPECT_EQ(d.at(1, 0), 0.0);
    EXPECT_EQ(d.at(0, 1), 0.0);
    EXPECT_GT(d.at(1, 1), 0.0);
}

TEST(JointFsPure, PhaseInvariance) {
    const auto bs = BeamSplitterSetting::angle(0.9);
    const auto a = homlab::joint_fs_pure(2, homlab::coherent(1.5), bs);
    const auto b = homlab::joint_fs_pure(2, homlab::coherent(std::polar(1.5, 1.3)), bs);
    EXPECT_LT(max_diff(a, b), 1e-12);
}

TEST(JointFsMixed, ThermalCentralNodalLine) {
    for (int n : {1, 3}) {
        const auto d = homlab::joint_fs_mixed(n, homlab::thermal(9.0), kBalanced);
        for (double v : d.diagonal()) {
            ASSERT_LT(v, 1e-14);
        }
    }
    const auto vac = homlab::joint_fs_mixed(0, homlab::thermal(0.0), BeamSplitterSetting::angle(0.4));
    EXPECT_EQ(vac.at(0, 0), 1.0);
}

TEST(JointPurePure, OddInputsGiveCentralNodalLine) {
    const std::vector<int> ns{1, 3};
    for (const auto &a : {homlab::odd_cat(2.0), homlab::superposition(ns)}) {
        const auto d = homlab::joint_pure_pure(a, homlab::coherent(3.0), kBalanced, 40);
        for (double v : d.diagonal()) {
            ASSERT_LT(v, 1e-14);
        }
    }
}

TEST(JointPurePure, FockInputsMatchFsPath) {
    const auto a = homlab::joint_pure_pure(homlab::fock(1), homlab::fock(1), kBalanced);
    const auto b = homlab::joint_fs_fs(1, 1, kBalanced);
    EXPECT_LT(max_diff(a, b), 1e-15);
}

TEST(JointPurePure, MatchesSymbolicOracle) {
    std::mt19937_64 rng(7);
    for (double theta : {0.0, 0.7, kPi / 2, 2.4, kPi}) {
        const auto a = random_pure(rng, 5);
        const auto b = random_pure(rng, 6);
        const auto d = homlab::joint_pure_pure(a, b, BeamSplitterSetting::angle(theta), 11);
        const auto expected = oracle::pure_pure_grid(a.amplitudes(), b.amplitudes(), theta, 11);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            ASSERT_NEAR(d.grid[i], expected[i], 1e-13);
        }
    }
}

TEST(JointPureMixed, ReducesToFsMixed) {
    const auto a = homlab::joint_pure_mixed(homlab::fock(1), homlab::thermal(9.0), kBalanced);
    const auto b = homlab::joint_fs_mixed(1, homlab::thermal(9.0), kBalanced);
    EXPECT_LT(max_diff(a, b), 1e-14);
}

TEST(JointPureMixed, OddCatThermalMatchesGeneral) {
    const auto cat = homlab::odd_cat(2.0);
    const auto th = homlab::thermal(4.0);
    const auto d = homlab::joint_pure_mixed(cat, th, kBalanced, 60);
    for (double v : d.diagonal()) {
        ASSERT_LT(v, 1e-14);
    }
    EXPECT_LT(max_diff(d, general_of(homlab::to_density(cat), th, kBalanced, 60)), 1e-10);
}

TEST(JointPureMixed, MixedParityBreaksLine) {
    const std::vector<int> ns{0, 1};
    const auto d = homlab::joint_pure_mixed(homlab::superposition(ns), homlab::thermal(1.0), kBalanced, 20);
    double largest = 0.0;
    for (double v : d.diagonal()) {
        largest = std::max(largest, v);
    }
    EXPECT_GT(largest, 1e-3);
}

TEST(JointGeneral, VacuumAndFsConsistency) {
    const auto vac = general_of(homlab::thermal(0.0), homlab::thermal(0.0), BeamSplitterSetting::angle(1.3), 0);
    EXPECT_NEAR(vac.at(0, 0), 1.0, 1e-15);
    const auto beta = homlab::coherent(1.2);
    const auto fs = homlab::joint_fs_pure(1, beta, kBalanced);
    const auto gen = general_of(homlab::to_density(homlab::fock(1)), homlab::to_density(beta), kBalanced, fs.grid_max);
    EXPECT_LT(max_diff(fs, gen), 1e-12);
}

TEST(JointGeneral, DenseInputMatchesProduct) {
    std::mt19937_64 rng(11);
    const auto a = random_mixed(rng, 3);
    const auto b = random_mixed(rng, 4);
    std::vector<Complex> dense(static_cast<std::size_t>(4 * 5 * 4 * 5));
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 4; ++m) {
            for (int n2 = 0; n2 <= 3; ++n2) {
                for (int m2 = 0; m2 <= 4; ++m2) {
                    dense[static_cast<std::size_t>((n * 5 + m) * 20 + n2 * 5 + m2)] =
                        a.element(n, n2) * b.element(m, m2);
                }
            }
        }
    }
    const homlab::BipartiteDensity rho(3, 4, dense, "dense");
    const auto bs = BeamSplitterSetting::angle(0.8);
    EXPECT_LT(max_diff(homlab::joint_general(rho, bs, 7), general_of(a, b, bs, 7)), 1e-14);
    EXPECT_NEAR(rho.trace(), a.trace() * b.trace(), 1e-14);
}

TEST(JointPaths, RandomStatesAgreeWithGeneral) {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_int_distribution<int> photons(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto bs = trial % 5 == 0 ? kBalanced : BeamSplitterSetting::angle(angle(rng));
        const int n = photons(rng);
        const int m = photons(rng);
        const auto pa = random_pure(rng, 4);
        const auto pb = random_pure(rng, 5);
        const auto mb = random_mixed(rng, 5);
        const int grid = 9;
        const auto rho_n = homlab::to_density(homlab::fock(n));

        ASSERT_LT(max_diff(homlab::joint_fs_fs(n, m, bs, grid),
                           general_of(rho_n, homlab::to_density(homlab::fock(m)), bs, grid)),
                  1e-10);
        ASSERT_LT(max_diff(homlab::joint_fs_pure(n, pb, bs, grid), general_of(rho_n, homlab::to_density(pb), bs, grid)),
                  1e-10);
        ASSERT_LT(max_diff(homlab::joint_fs_mixed(n, mb, bs, grid), general_of(rho_n, mb, bs, grid)), 1e-10);
        ASSERT_LT(max_diff(homlab::joint_pure_pure(pa, pb, bs, grid),
                           general_of(homlab::to_density(pa), homlab::to_density(pb), bs, grid)),
                  1e-10);
        ASSERT_LT(max_diff(homlab::joint_pure_mixed(pa, mb, bs, grid), general_of(homlab::to_density(pa), mb, bs, grid)),
                  1e-10);
    }
}

TEST(JointPaths, MassAndEnergyConservation) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_pure(rng, 5);
        const auto b = random_mixed(rng, 6);
        const auto bs = BeamSplitterSetting::angle(0.3 * (trial + 1));
        const auto d = homlab::joint_pure_mixed(a, b, bs);
        double mass = 0.0;
        for (double v : d.grid) {
            mass += v;
        }
        EXPECT_NEAR(mass, 1.0, 1e-10);
        EXPECT_NEAR(d.total_mass, mass, 1e-12);
        const double expected = a.mean_photon_number() + b.mean_photon_number();
        EXPECT_NEAR(energy(d), expected, 1e-9);
    }
    const auto coh = homlab::joint_fs_pure(2, homlab::coherent(2.0), BeamSplitterSetting::angle(1.0));
    EXPECT_NEAR(energy(coh), 2.0 + 4.0, 1e-8);
}

TEST(JointPaths, TruncatedInputReportsDeficit) {
    const auto clipped = homlab::coherent(3.0, 12, homlab::TruncationPolicy::Report);
    const auto d = homlab::joint_fs_pure(1, clipped, kBalanced);
    EXPECT_NEAR(d.tail_deficit, homlab::validate(clipped).deficit, 1e-9);
    EXPECT_FALSE(d.warnings.empty());
    const auto small = homlab::joint_fs_pure(1, homlab::coherent(3.0), kBalanced, 5);
    EXPECT_GT(small.tail_deficit, 0.1);
    EXPECT_FALSE(small.warnings.empty());
}

TEST(JointDistribution, DispatcherAndLabels) {
    const homlab::State a = homlab::fock(1);
    const homlab::State b = homlab::coherent(1.0);
    const auto d = homlab::joint_distribution(a, b, kBalanced, 5);
    EXPECT_EQ(d.size(), 6);
    EXPECT_EQ(d.input_label, "fock(1) (x) coherent(beta=1)");
    EXPECT_LT(max_diff(d, homlab::joint_fs_pure(1, homlab::coherent(1.0), kBalanced, 5)), 1e-15);
    const homlab::State th = homlab::thermal(1.0);
    const auto m = homlab::joint_distribution(th, b, kBalanced, 5);
    EXPECT_GT(m.total_mass, 0.5);
}

TEST(CertifyZero, ExactDiagonal) {
    const std::vector<int> odd{1, 3, 5};
    for (int m = 0; m <= 40; ++m) {
        ASSERT_TRUE(homlab::certify_zero(odd, m, m, BigRational(1, 2)));
    }
    const std::vector<int> even{2};
    EXPECT_FALSE(homlab::certify_zero(even, 3, 3, BigRational(1, 2)));
    EXPECT_TRUE(homlab::certify_zero(even, 1, 0, BigRational(1, 2)));
    EXPECT_EQ(homlab::exact_fs_probability(1, 2, 0, BigRational(1), BigRational(1, 2)), BigRational(1, 2));
    EXPECT_TRUE(homlab::exact_fs_probability(1, 1, 1, BigRational(1), BigRational(1, 2)).is_zero());
}

TEST(PhotonSupport, Lists) {
    const std::vector<int> ns{1, 3};
    EXPECT_EQ(homlab::photon_support(homlab::superposition(ns)), ns);
    EXPECT_EQ(homlab::photon_support(homlab::thermal(0.0)), std::vector<int>{0});
}
