#pragma once

// Output joint photon-number distributions P(m_a, m_b) behind a beam splitter.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homlab/beam_splitter.h"
#include "homlab/states.h"

namespace homlab {

struct JointDistribution {
    int grid_max = 0;
    /// Row-major, (grid_max+1)^2 entries; entry [m_a * (grid_max+1) + m_b].
    std::vector<double> grid;
    BeamSplitterSetting bs = kBalanced;
    std::string input_label;
    double total_mass = 0.0;
    /// 1 - total_mass: truncation tail of the inputs plus anything clipped by the grid.
    double tail_deficit = 0.0;
    std::vector<std::string> warnings;

    int size() const { return grid_max + 1; }
    /// P(m_a, m_b), 0 outside the grid.
    double at(int m_a, int m_b) const;
    std::vector<double> diagonal() const;
};

/// Density operator on the two input modes, either a product rho_a (x) rho_b
/// (kept factored) or a dense table rho[(n,m),(n',m')].
class BipartiteDensity {
   public:
    static BipartiteDensity product(const MixedState &a, const MixedState &b);

    /// `data` is row-major over the combined index n*(cutoff_b+1)+m.
    BipartiteDensity(int cutoff_a, int cutoff_b, std::vector<Complex> data, std::string label);

    int cutoff_a() const { return cutoff_a_; }
    int cutoff_b() const { return cutoff_b_; }
    const std::string &label() const { return label_; }

    /// <n, m| rho |n2, m2>, 0 outside the stored block.
    Complex element(int n, int m, int n2, int m2) const;
    double trace() const;

   private:
    BipartiteDensity() = default;

    int cutoff_a_ = 0;
    int cutoff_b_ = 0;
    std::string label_;
    std::vector<Complex> dense_;
    std::optional<MixedState> a_;
    std::optional<MixedState> b_;
};

/// |n> (x) |m>. grid_max defaults to n+m; smaller values are a domain error.
JointDistribution joint_fs_fs(int n, int m, const BeamSplitterSetting &bs,
                              std::optional<int> grid_max = std::nullopt);

/// |n> (x) |phi>. grid_max defaults to n + cutoff of phi.
JointDistribution joint_fs_pure(int n, const PureState &phi_b, const BeamSplitterSetting &bs,
                                std::optional<int> grid_max = std::nullopt);

/// |n> (x) rho_b; only the populations of rho_b contribute.
JointDistribution joint_fs_mixed(int n, const MixedState &rho_b, const BeamSplitterSetting &bs,
                                 std::optional<int> grid_max = std::nullopt);

/// |psi> (x) |phi>: amplitudes are summed over n before squaring.
JointDistribution joint_pure_pure(const PureState &psi_a, const PureState &phi_b,
                                  const BeamSplitterSetting &bs,
                                  std::optional<int> grid_max = std::nullopt);

/// |psi><psi| (x) rho_b as the bilinear sum
/// sum_{n,n'} c_n c*_{n'} rho_{s-n, s-n'} f f', s = m_a + m_b.
JointDistribution joint_pure_mixed(const PureState &psi_a, const MixedState &rho_b,
                                   const BeamSplitterSetting &bs,
                                   std::optional<int> grid_max = std::nullopt);

/// Full trace formula for an arbitrary two-mode density operator.
JointDistribution joint_general(const BipartiteDensity &rho, const BeamSplitterSetting &bs,
                                std::optional<int> grid_max = std::nullopt);

/// Picks the specialized path for a pair of states (a Fock state in mode a
/// uses the FS paths, a mixed a-mode state goes through joint_general).
JointDistribution joint_distribution(const State &a, const State &b, const BeamSplitterSetting &bs,
                                     std::optional<int> grid_max = std::nullopt);

/// Photon numbers carrying weight in a state.
std::vector<int> photon_support(const PureState &state);
std::vector<int> photon_support(const MixedState &state);

/// Exact zero certificate: true when |f^{(n, m_a+m_b-n)}_{m_a}|^2 = 0 exactly
/// for every n in a_support. Every f factor of the entry then vanishes, so
/// P(m_a, m_b) = 0 for any a-mode input on that support and any b-mode input.
bool certify_zero(std::span<const int> a_support, int m_a, int m_b, const BigRational &transmittance);

/// Exact P(m_a, m_b) for |n> in mode a and a b-mode population `weight_b` at
/// m = m_a + m_b - n.
BigRational exact_fs_probability(int n, int m_a, int m_b, const BigRational &weight_b,
                                 const BigRational &transmittance);

}  // namespace homlab
