#pragma once

// Single-mode input states in the Fock basis: constructors for the common
// families, validation, and the text descriptors used by the CLI.

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homlab {

using Complex = std::complex<double>;

/// Default allowed norm (or trace) deficit from truncating a state.
inline constexpr double kDefaultNormTolerance = 1e-10;

enum class Parity { Even, Odd, Mixed };

std::string_view parity_name(Parity parity);

/// What a constructor does when an explicit cutoff leaves tail mass >= eps.
enum class TruncationPolicy {
    Strict,  // throw TruncationError
    Report,  // keep the truncated state; the deficit shows up in validate()
};

class TruncationError : public std::domain_error {
   public:
    TruncationError(const std::string &family, int cutoff, double tail_mass);

    int cutoff() const { return cutoff_; }
    double tail_mass() const { return tail_mass_; }

   private:
    int cutoff_;
    double tail_mass_;
};

/// Pure state sum_n c_n |n>, n = 0..cutoff.
class PureState {
   public:
    /// Throws domain_error if sum |c_n|^2 exceeds 1 by more than 1e-10.
    PureState(std::vector<Complex> amplitudes, std::string label);

    const std::vector<Complex> &amplitudes() const { return amplitudes_; }
    int cutoff() const { return static_cast<int>(amplitudes_.size()) - 1; }
    const std::string &label() const { return label_; }

    /// c_n, or 0 outside 0..cutoff.
    Complex amplitude(int n) const;
    /// |c_n|^2, or 0 outside 0..cutoff.
    double weight(int n) const;

    double norm_squared() const;
    double mean_photon_number() const;
    double photon_number_variance() const;
    Parity parity() const;

   private:
    std::vector<Complex> amplitudes_;
    std::string label_;
};

/// Density matrix rho[m][m'] in the Fock basis, m, m' = 0..cutoff.
class MixedState {
   public:
    /// `rho` is row-major, (cutoff+1)^2 entries. Throws domain_error when the
    /// matrix is not square, not Hermitian to 1e-12, or has trace above 1.
    MixedState(std::vector<Complex> rho, int cutoff, std::string label);

    int cutoff() const { return cutoff_; }
    const std::string &label() const { return label_; }
    const std::vector<Complex> &data() const { return rho_; }

    /// rho[m][m'], or 0 outside the stored block.
    Complex element(int m, int m_prime) const;
    /// rho[m][m] as a real number, 0 outside the block.
    double population(int m) const;

    double trace() const;
    double mean_photon_number() const;
    double hermiticity_residual() const;
    Parity parity() const;

   private:
    std::vector<Complex> rho_;
    int cutoff_;
    std::string label_;
};

MixedState to_density(const PureState &state);

struct StateReport {
    double deficit = 0.0;               // 1 - norm (or 1 - trace)
    double hermiticity_residual = 0.0;  // max |rho - rho^dagger|, 0 for pure states
    Parity parity = Parity::Even;
};

StateReport validate(const PureState &state);
StateReport validate(const MixedState &state);

/// |n>. Cutoff defaults to n.
PureState fock(int n, std::optional<int> cutoff = std::nullopt);

/// Equal-weight superposition of the given Fock states.
PureState superposition(std::span<const int> photon_numbers);

/// Coherent state |beta>. Without a cutoff the smallest one with tail < eps is used.
PureState coherent(Complex beta, std::optional<int> cutoff = std::nullopt,
                   TruncationPolicy policy = TruncationPolicy::Strict,
                   double eps_norm = kDefaultNormTolerance);

/// Thermal state with Bose-Einstein populations nbar^m / (1+nbar)^{m+1}.
MixedState thermal(double nbar, std::optional<int> cutoff = std::nullopt,
                   TruncationPolicy policy = TruncationPolicy::Strict,
                   double eps_norm = kDefaultNormTolerance);

/// Odd cat state (|alpha> - |-alpha>) / N with N = sqrt(2 - 2 exp(-2|alpha|^2)).
PureState odd_cat(Complex alpha, std::optional<int> cutoff = std::nullopt,
                  TruncationPolicy policy = TruncationPolicy::Strict,
                  double eps_norm = kDefaultNormTolerance);

/// a^dagger S(xi)|0> / cosh(r) with xi = r e^{i phi}; odd photon numbers only.
PureState photon_added_smss(double r, double phi = 0.0, std::optional<int> cutoff = std::nullopt,
                            TruncationPolicy policy = TruncationPolicy::Strict,
                            double eps_norm = kDefaultNormTolerance);

using State = std::variant<PureState, MixedState>;

/// Parsed "kind:key=value,..." text such as "fock:3", "coherent:beta=3",
/// "thermal:nbar=9", "oddcat:alpha=2", "pasmss:r=0.5", "superpos:1+3",
/// or "custom:file=state.json".
struct StateDescriptor {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;
    std::string text;

    std::optional<std::string> get(std::string_view key) const;
};

/// Throws invalid_argument on malformed text or unknown kinds.
StateDescriptor parse_state_descriptor(std::string_view text);

/// Builds the state; numeric parameter problems surface as domain_error.
State build_state(const StateDescriptor &descriptor);

/// Loads a custom state from a JSON document:
///   {"label": "...", "amplitudes": [c0, c1, ...]}       (pure)
///   {"label": "...", "rho": [[r00, r01, ...], ...]}     (mixed)
/// Each entry is a number or a [re, im] pair.
State load_state_json(const std::string &path);
State parse_state_json(std::string_view document, std::string default_label = "custom");

}  // namespace homlab
