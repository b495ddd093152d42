#pragma once

// Random input states for property tests.

#include <cmath>
#include <random>
#include <vector>

#include "homlab/states.h"

namespace oracle {

/// Gaussian amplitudes on 0..cutoff; parity 0 or 1 keeps only even or odd photon numbers.
inline homlab::PureState random_pure(std::mt19937_64 &rng, int cutoff, int parity = -1) {
    std::normal_distribution<double> gauss;
    std::vector<homlab::Complex> amps(static_cast<std::size_t>(cutoff) + 1);
    double norm = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        if (parity >= 0 && n % 2 != parity) {
            continue;
        }
        amps[static_cast<std::size_t>(n)] = homlab::Complex(gauss(rng), gauss(rng));
        norm += std::norm(amps[static_cast<std::size_t>(n)]);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return homlab::PureState(amps, "random");
}

/// Mixture of three random pure states.
inline homlab::MixedState random_mixed(std::mt19937_64 &rng, int cutoff) {
    std::uniform_real_distribution<double> unit;
    const int side = cutoff + 1;
    std::vector<homlab::Complex> rho(static_cast<std::size_t>(side * side));
    const double w[3] = {unit(rng), unit(rng), unit(rng)};
    const double total = w[0] + w[1] + w[2];
    for (double wi : w) {
        const auto psi = random_pure(rng, cutoff);
        for (int i = 0; i < side; ++i) {
            for (int j = 0; j < side; ++j) {
                rho[static_cast<std::size_t>(i * side + j)] +=
                    wi / total * psi.amplitude(i) * std::conj(psi.amplitude(j));
            }
        }
    }
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j < i; ++j) {
            rho[static_cast<std::size_t>(i * side + j)] = std::conj(rho[static_cast<std::size_t>(j * side + i)]);
        }
        rho[static_cast<std::size_t>(i * side + i)] = rho[static_cast<std::size_t>(i * side + i)].real();
    }
    return homlab::MixedState(rho, cutoff, "random");
}

}  // namespace oracle
