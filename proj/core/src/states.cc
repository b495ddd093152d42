#include "homlab/states.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace homlab {

namespace {

constexpr int kMaxAutoCutoff = 20000;

std::string format_number(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) {
        return format_number(z.real());
    }
    std::ostringstream out;
    out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

double tail_of(const std::vector<Complex> &amps) {
    long double sum = 0.0L;
    for (const auto &c : amps) {
        sum += std::norm(c);
    }
    return static_cast<double>(1.0L - sum);
}

// Shared cutoff logic for the pure-state families: `next(n)` returns c_n.
// Without a cutoff, grows until the tail mass drops below eps.
template <typename Amplitude>
std::vector<Complex> build_amplitudes(const std::string &family, std::optional<int> cutoff,
                                      TruncationPolicy policy, double eps, Amplitude next) {
    std::vector<Complex> amps;
    if (cutoff) {
        if (*cutoff < 0) {
            throw std::domain_error(family + ": cutoff must be non-negative");
        }
        amps.reserve(static_cast<std::size_t>(*cutoff) + 1);
        for (int n = 0; n <= *cutoff; ++n) {
            amps.push_back(next(n));
        }
        double tail = tail_of(amps);
        if (tail >= eps && policy == TruncationPolicy::Strict) {
            throw TruncationError(family, *cutoff, tail);
        }
        return amps;
    }
    long double sum = 0.0L;
    for (int n = 0; n <= kMaxAutoCutoff; ++n) {
        Complex c = next(n);
        amps.push_back(c);
        sum += std::norm(c);
        if (1.0L - sum < eps) {
            return amps;
        }
    }
    throw TruncationError(family, kMaxAutoCutoff, static_cast<double>(1.0L - sum));
}

}  // namespace

std::string_view parity_name(Parity parity) {
    switch (parity) {
        case Parity::Even:
            return "even";
        case Parity::Odd:
            return "odd";
        case Parity::Mixed:
            return "mixed";
    }
    return "mixed";
}

TruncationError::TruncationError(const std::string &family, int cutoff, double tail_mass)
    : std::domain_error(family + ": cutoff " + std::to_string(cutoff) + " leaves tail mass " +
                        format_number(tail_mass) + " above the norm tolerance"),
      cutoff_(cutoff),
      tail_mass_(tail_mass) {}

PureState::PureState(std::vector<Complex> amplitudes, std::string label)
    : amplitudes_(std::move(amplitudes)), label_(std::move(label)) {
    if (amplitudes_.empty()) {
        throw std::domain_error("pure state needs at least one amplitude");
    }
    if (norm_squared() > 1.0 + 1e-10) {
        throw std::domain_error("pure state '" + label_ + "' has norm above 1");
    }
}

Complex PureState::amplitude(int n) const {
    if (n < 0 || n > cutoff()) {
        return 0.0;
    }
    return amplitudes_[static_cast<std::size_t>(n)];
}

double PureState::weight(int n) const { return std::norm(amplitude(n)); }

double PureState::norm_squared() const {
    long double sum = 0.0L;
    for (const auto &c : amplitudes_) {
        sum += std::norm(c);
    }
    return static_cast<double>(sum);
}

double PureState::mean_photon_number() const {
    long double sum = 0.0L;
    for (int n = 0; n <= cutoff(); ++n) {
        sum += n * std::norm(amplitudes_[n]);
    }
    return static_cast<double>(sum);
}

double PureState::photon_number_variance() const {
    long double s1 = 0.0L;
    long double s2 = 0.0L;
    for (int n = 0; n <= cutoff(); ++n) {
        long double w = std::norm(amplitudes_[n]);
        s1 += n * w;
        s2 += static_cast<long double>(n) * n * w;
    }
    return static_cast<double>(s2 - s1 * s1);
}

Parity PureState::parity() const {
    bool has_even = false;
    bool has_odd = false;
    for (int n = 0; n <= cutoff(); ++n) {
        if (amplitudes_[n] != Complex(0.0)) {
            (n % 2 == 0 ? has_even : has_odd) = true;
        }
    }
    if (has_even && has_odd) {
        return Parity::Mixed;
    }
    return has_odd ? Parity::Odd : Parity::Even;
}

MixedState::MixedState(std::vector<Complex> rho, int cutoff, std::string label)
    : rho_(std::move(rho)), cutoff_(cutoff), label_(std::move(label)) {
    if (cutoff_ < 0) {
        throw std::domain_error("mixed state cutoff must be non-negative");
    }
    const auto dim = static_cast<std::size_t>(cutoff_) + 1;
    if (rho_.size() != dim * dim) {
        throw std::domain_error("mixed state '" + label_ + "': density matrix is not (cutoff+1)^2");
    }
    if (hermiticity_residual() > 1e-12) {
        throw std::domain_error("mixed state '" + label_ + "': density matrix is not Hermitian");
    }
    if (trace() > 1.0 + 1e-10) {
        throw std::domain_error("mixed state '" + label_ + "': trace above 1");
    }
    for (int m = 0; m <= cutoff_; ++m) {
        if (population(m) < -1e-12) {
            throw std::domain_error("mixed state '" + label_ + "': negative population");
        }
    }
}

Complex MixedState::element(int m, int m_prime) const {
    if (m < 0 || m_prime < 0 || m > cutoff_ || m_prime > cutoff_) {
        return 0.0;
    }
    return rho_[static_cast<std::size_t>(m) * (cutoff_ + 1) + m_prime];
}

double MixedState::population(int m) const { return element(m, m).real(); }

double MixedState::trace() const {
    long double sum = 0.0L;
    for (int m = 0; m <= cutoff_; ++m) {
        sum += population(m);
    }
    return static_cast<double>(sum);
}

double MixedState::mean_photon_number() const {
    long double sum = 0.0L;
    for (int m = 0; m <= cutoff_; ++m) {
        sum += m * population(m);
    }
    return static_cast<double>(sum);
}

double MixedState::hermiticity_residual() const {
    double worst = 0.0;
    for (int m = 0; m <= cutoff_; ++m) {
        for (int k = m; k <= cutoff_; ++k) {
            worst = std::max(worst, std::abs(element(m, k) - std::conj(element(k, m))));
        }
    }
    return worst;
}

Parity MixedState::parity() const {
    bool has_even = false;
    bool has_odd = false;
    for (int m = 0; m <= cutoff_; ++m) {
        for (int k = 0; k <= cutoff_; ++k) {
            if (element(m, k) == Complex(0.0)) {
                continue;
            }
            if (m % 2 == 0 && k % 2 == 0) {
                has_even = true;
            } else if (m % 2 == 1 && k % 2 == 1) {
                has_odd = true;
            } else {
                return Parity::Mixed;
            }
        }
    }
    if (has_even && has_odd) {
        return Parity::Mixed;
    }
    return has_odd ? Parity::Odd : Parity::Even;
}

MixedState to_density(const PureState &state) {
    const int cutoff = state.cutoff();
    const auto dim = static_cast<std::size_t>(cutoff) + 1;
    std::vector<Complex> rho(dim * dim);
    for (int m = 0; m <= cutoff; ++m) {
        for (int k = 0; k <= cutoff; ++k) {
            rho[m * dim + k] = state.amplitude(m) * std::conj(state.amplitude(k));
        }
    }
    return MixedState(std::move(rho), cutoff, state.label());
}

StateReport validate(const PureState &state) {
    return StateReport{1.0 - state.norm_squared(), 0.0, state.parity()};
}

StateReport validate(const MixedState &state) {
    return StateReport{1.0 - state.trace(), state.hermiticity_residual(), state.parity()};
}

PureState fock(int n, std::optional<int> cutoff) {
    if (n < 0) {
        throw std::domain_error("fock: photon number must be non-negative");
    }
    const int c = cutoff.value_or(n);
    if (n > c) {
        throw std::domain_error("fock: photon number " + std::to_string(n) + " exceeds cutoff " +
                                std::to_string(c));
    }
    std::vector<Complex> amps(static_cast<std::size_t>(c) + 1, 0.0);
    amps[n] = 1.0;
    return PureState(std::move(amps), "fock(" + std::to_string(n) + ")");
}

PureState superposition(std::span<const int> photon_numbers) {
    if (photon_numbers.empty()) {
        throw std::domain_error("superposition: no photon numbers given");
    }
    std::set<int> unique(photon_numbers.begin(), photon_numbers.end());
    if (unique.size() != photon_numbers.size()) {
        throw std::domain_error("superposition: repeated photon number");
    }
    if (*unique.begin() < 0) {
        throw std::domain_error("superposition: photon numbers must be non-negative");
    }
    const int cutoff = *unique.rbegin();
    const double amp = 1.0 / std::sqrt(static_cast<double>(unique.size()));
    std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1, 0.0);
    std::string label = "superpos(";
    bool first = true;
    for (int n : unique) {
        amps[n] = amp;
        label += (first ? "" : "+") + std::to_string(n);
        first = false;
    }
    return PureState(std::move(amps), label + ")");
}

PureState coherent(Complex beta, std::optional<int> cutoff, TruncationPolicy policy, double eps_norm) {
    const double mag2 = std::norm(beta);
    Complex current = std::exp(-mag2 / 2.0);
    auto next = [&](int n) {
        if (n > 0) {
            current *= beta / std::sqrt(static_cast<double>(n));
        }
        return current;
    };
    auto amps = build_amplitudes("coherent", cutoff, policy, eps_norm, next);
    return PureState(std::move(amps), "coherent(beta=" + format_complex(beta) + ")");
}

MixedState thermal(double nbar, std::optional<int> cutoff, TruncationPolicy policy, double eps_norm) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("thermal: mean photon number must be non-negative");
    }
    const double ratio = nbar / (1.0 + nbar);
    int c = 0;
    if (cutoff) {
        if (*cutoff < 0) {
            throw std::domain_error("thermal: cutoff must be non-negative");
        }
        c = *cutoff;
        const double tail = std::pow(ratio, c + 1);
        if (tail >= eps_norm && policy == TruncationPolicy::Strict) {
            throw TruncationError("thermal", c, tail);
        }
    } else if (ratio > 0.0) {
        // smallest c with ratio^{c+1} < eps
        c = static_cast<int>(std::floor(std::log(eps_norm) / std::log(ratio)));
        while (c > 0 && std::pow(ratio, c) < eps_norm) {
            --c;
        }
        while (std::pow(ratio, c + 1) >= eps_norm) {
            ++c;
        }
    }
    const auto dim = static_cast<std::size_t>(c) + 1;
    std::vector<Complex> rho(dim * dim, 0.0);
    double p = 1.0 / (1.0 + nbar);
    for (int m = 0; m <= c; ++m) {
        rho[m * dim + m] = p;
        p *= ratio;
    }
    return MixedState(std::move(rho), c, "thermal(nbar=" + format_number(nbar) + ")");
}

PureState odd_cat(Complex alpha, std::optional<int> cutoff, TruncationPolicy policy, double eps_norm) {
    const double mag2 = std::norm(alpha);
    if (mag2 == 0.0) {
        throw std::domain_error("odd_cat: alpha = 0 gives an unnormalizable state");
    }
    const double norm = std::sqrt(-2.0 * std::expm1(-2.0 * mag2));
    Complex coherent_term = std::exp(-mag2 / 2.0);
    auto next = [&](int n) {
        if (n > 0) {
            coherent_term *= alpha / std::sqrt(static_cast<double>(n));
        }
        return (n % 2 == 1) ? 2.0 / norm * coherent_term : Complex(0.0);
    };
    auto amps = build_amplitudes("odd_cat", cutoff, policy, eps_norm, next);
    return PureState(std::move(amps), "oddcat(alpha=" + format_complex(alpha) + ")");
}

PureState photon_added_smss(double r, double phi, std::optional<int> cutoff, TruncationPolicy policy,
                            double eps_norm) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::domain_error("photon_added_smss: squeezing r must be non-negative");
    }
    const double t = std::tanh(r);
    const Complex phase = std::polar(1.0, phi);
    // vacuum-squeezed amplitude on |2k>, updated as k grows
    Complex squeezed = 1.0 / std::sqrt(std::cosh(r));
    int k = 0;
    auto next = [&](int n) -> Complex {
        if (n % 2 == 0) {
            return 0.0;
        }
        const int want = (n - 1) / 2;
        while (k < want) {
            squeezed *= phase * t * std::sqrt((2.0 * k + 1.0) / (2.0 * k + 2.0));
            ++k;
        }
        return std::sqrt(static_cast<double>(n)) * squeezed / std::cosh(r);
    };
    auto amps = build_amplitudes("photon_added_smss", cutoff, policy, eps_norm, next);
    std::string label = "pasmss(r=" + format_number(r);
    if (phi != 0.0) {
        label += ",phi=" + format_number(phi);
    }
    return PureState(std::move(amps), label + ")");
}

}  // namespace homlab
