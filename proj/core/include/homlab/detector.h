#pragma once

// Lossy photon-number-resolving detection and heralding from a two-mode
// squeezed vacuum source.

#include <optional>

#include "homlab/joint_distribution.h"

namespace homlab {

struct LossConfig {
    double eta_a = 1.0;
    double eta_b = 1.0;
    /// Upper limit on the latent photon numbers; defaults to the grid size.
    std::optional<int> source_max;
};

/// P~(m_a, m_b) = sum_{M_a, M_b} Bin(m_a | M_a, eta_a) Bin(m_b | M_b, eta_b) P(M_a, M_b).
/// Efficiencies outside [0, 1] or a source_max below grid_max are domain errors.
JointDistribution lossy_distribution(const JointDistribution &dist, const LossConfig &loss);

/// Two-mode squeezed vacuum with pair weights p_n = tanh^{2n}(r) / cosh^2(r), n <= cutoff.
struct SqueezedSource {
    double r = 0.0;
    int cutoff = 0;

    /// Mass beyond the cutoff, tanh^{2(cutoff+1)}(r).
    double tail_mass() const;
};

/// Without a cutoff, the smallest one with tail mass below eps is used.
SqueezedSource squeezed_source(double r, std::optional<int> cutoff = std::nullopt,
                               double eps = kDefaultNormTolerance);

double tmss_prob(int n, const SqueezedSource &source);

/// Probability of counting t photons with efficiency eta on one arm of the source.
/// The truncated sum underestimates the true value by at most source.tail_mass().
double spdc_detection_prob(int t, double eta, const SqueezedSource &source);

/// P(n' | t): probability that the heralded arm holds n' photons given t counts.
/// With eta = 0 only t = 0 is possible and the result is the prior p_{n'}.
/// t beyond the source cutoff, or a count of zero probability, is a domain error.
double herald_posterior(int n_prime, int t, double eta, const SqueezedSource &source);

/// 10 log10(exp(-2r)).
double squeezing_db(double r);

}  // namespace homlab
