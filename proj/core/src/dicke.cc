#include "homlab/dicke.h"

#include <cmath>
#include <stdexcept>

namespace homlab {

namespace {

void check_jm(int two_j, int two_m) {
    if (two_j < 0) {
        throw std::domain_error("J must be non-negative");
    }
    if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0) {
        throw std::domain_error("M must satisfy |M| <= J with J - M an integer");
    }
}

}  // namespace

AngularState::AngularState(int two_j, std::vector<Complex> amplitudes)
    : two_j_(two_j), amps_(std::move(amplitudes)) {
    if (two_j_ < 0) {
        throw std::domain_error("J must be non-negative");
    }
    if (amps_.size() != static_cast<std::size_t>(two_j_) + 1) {
        throw std::domain_error("angular state needs 2J+1 amplitudes");
    }
    double norm = 0.0;
    for (const auto &c : amps_) {
        norm += std::norm(c);
    }
    if (std::abs(norm - 1.0) > kDefaultNormTolerance) {
        throw std::domain_error("angular state is not normalized");
    }
}

Complex AngularState::amplitude(int two_m) const {
    if (std::abs(two_m) > two_j_ || (two_j_ - two_m) % 2 != 0) {
        return 0.0;
    }
    return amps_[static_cast<std::size_t>((two_m + two_j_) / 2)];
}

AngularState AngularState::dicke(int two_j, int two_m) {
    check_jm(two_j, two_m);
    std::vector<Complex> amps(static_cast<std::size_t>(two_j) + 1, 0.0);
    amps[(two_m + two_j) / 2] = 1.0;
    return AngularState(two_j, std::move(amps));
}

FockPair jm_to_fock(int two_j, int two_m) {
    check_jm(two_j, two_m);
    return {(two_j + two_m) / 2, (two_j - two_m) / 2};
}

double wigner_d(int two_j, int two_m_prime, int two_m, const BeamSplitterSetting &bs) {
    const FockPair nm = jm_to_fock(two_j, two_m);
    const FockPair out = jm_to_fock(two_j, two_m_prime);
    return bs_coefficient(nm.n, nm.m, out.n, bs);
}

double wigner_d(int two_j, int two_m_prime, int two_m, double theta) {
    return wigner_d(two_j, two_m_prime, two_m, BeamSplitterSetting::angle(theta));
}

std::vector<double> atomic_distribution(const AngularState &state, const BeamSplitterSetting &bs) {
    const int two_j = state.two_j();
    std::vector<Complex> amp(static_cast<std::size_t>(two_j) + 1, 0.0);
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
        const Complex c = state.amplitude(two_m);
        if (c == Complex(0.0)) {
            continue;
        }
        const FockPair nm = jm_to_fock(two_j, two_m);
        const auto f = transform_fock_pair(nm.n, nm.m, bs);
        for (int p = 0; p <= two_j; ++p) {
            amp[p] += c * f[p];
        }
    }
    std::vector<double> out(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        out[i] = std::norm(amp[i]);
    }
    return out;
}

std::vector<double> atomic_distribution(const AngularState &state, double theta) {
    return atomic_distribution(state, BeamSplitterSetting::angle(theta));
}

std::vector<AtomicCnlEntry> atomic_cnl_sweep(int j_min, int j_max, const BeamSplitterSetting &bs) {
    if (j_min < 0 || j_max < j_min) {
        throw std::domain_error("atomic_cnl_sweep: need 0 <= j_min <= j_max");
    }
    std::vector<AtomicCnlEntry> out;
    for (int j = j_min; j <= j_max; ++j) {
        for (int m = -j; m <= j; ++m) {
            const double d = wigner_d(2 * j, 0, 2 * m, bs);
            out.push_back({2 * j, 2 * m, jm_to_fock(2 * j, 2 * m), d * d});
        }
    }
    return out;
}

}  // namespace homlab
