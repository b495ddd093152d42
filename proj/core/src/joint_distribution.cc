#include "homlab/joint_distribution.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "homlab/parallel.h"

namespace homlab {

namespace {

JointDistribution make_grid(int grid_max, const BeamSplitterSetting &bs, std::string label) {
    if (grid_max < 0) {
        throw std::domain_error("grid_max must be non-negative");
    }
    JointDistribution d;
    d.grid_max = grid_max;
    const auto side = static_cast<std::size_t>(grid_max) + 1;
    d.grid.assign(side * side, 0.0);
    d.bs = bs;
    d.input_label = std::move(label);
    return d;
}

double &cell(JointDistribution &d, int m_a, int m_b) {
    return d.grid[static_cast<std::size_t>(m_a) * d.size() + m_b];
}

std::string describe_number(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

void finalize(JointDistribution &d, double input_mass) {
    long double sum = 0.0L;
    double most_negative = 0.0;
    for (auto &v : d.grid) {
        if (v < 0.0) {
            most_negative = std::min(most_negative, v);
            if (v > -1e-12) {
                v = 0.0;
            }
        }
        sum += v;
    }
    d.total_mass = static_cast<double>(sum);
    d.tail_deficit = 1.0 - d.total_mass;
    if (most_negative < -1e-12) {
        d.warnings.push_back("negative entries down to " + describe_number(most_negative));
    }
    // each of the two inputs may carry up to kDefaultNormTolerance of tail
    if (1.0 - input_mass > 2.0 * kDefaultNormTolerance) {
        d.warnings.push_back("input truncation deficit " + describe_number(1.0 - input_mass));
    }
    if (input_mass - d.total_mass > 1e-12) {
        d.warnings.push_back("grid clips probability mass " + describe_number(input_mass - d.total_mass));
    }
}

// Range of p = m_a for which both m_a and s - m_a lie on the grid.
std::pair<int, int> p_range(int s, int grid_max) { return {std::max(0, s - grid_max), std::min(s, grid_max)}; }

std::string pair_label(const std::string &a, const std::string &b) { return a + " (x) " + b; }

// Evaluates entries sum_{i,j} K[i][j] F_i[p] F_j[p] on the anti-diagonal s,
// where F_i = transform_fock_pair(n_i, s - n_i).
void bilinear_antidiagonal(JointDistribution &d, int s, const std::vector<int> &ns,
                           const std::vector<Complex> &kernel) {
    const auto k = ns.size();
    std::vector<std::vector<double>> f(k);
    for (std::size_t i = 0; i < k; ++i) {
        f[i] = transform_fock_pair(ns[i], s - ns[i], d.bs);
    }
    auto [lo, hi] = p_range(s, d.grid_max);
    for (int p = lo; p <= hi; ++p) {
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double fi = f[i][p];
            if (fi == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < k; ++j) {
                total += (kernel[i * k + j] * (fi * f[j][p])).real();
            }
        }
        cell(d, p, s - p) = total;
    }
}

}  // namespace

double JointDistribution::at(int m_a, int m_b) const {
    if (m_a < 0 || m_b < 0 || m_a > grid_max || m_b > grid_max) {
        return 0.0;
    }
    return grid[static_cast<std::size_t>(m_a) * size() + m_b];
}

std::vector<double> JointDistribution::diagonal() const {
    std::vector<double> out(static_cast<std::size_t>(size()));
    for (int m = 0; m <= grid_max; ++m) {
        out[m] = at(m, m);
    }
    return out;
}

BipartiteDensity BipartiteDensity::product(const MixedState &a, const MixedState &b) {
    BipartiteDensity rho;
    rho.cutoff_a_ = a.cutoff();
    rho.cutoff_b_ = b.cutoff();
    rho.label_ = pair_label(a.label(), b.label());
    rho.a_ = a;
    rho.b_ = b;
    return rho;
}

BipartiteDensity::BipartiteDensity(int cutoff_a, int cutoff_b, std::vector<Complex> data, std::string label)
    : cutoff_a_(cutoff_a), cutoff_b_(cutoff_b), label_(std::move(label)), dense_(std::move(data)) {
    if (cutoff_a_ < 0 || cutoff_b_ < 0) {
        throw std::domain_error("bipartite density: cutoffs must be non-negative");
    }
    const auto dim = static_cast<std::size_t>(cutoff_a_ + 1) * (cutoff_b_ + 1);
    if (dense_.size() != dim * dim) {
        throw std::domain_error("bipartite density: table size does not match the cutoffs");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            if (std::abs(dense_[i * dim + j] - std::conj(dense_[j * dim + i])) > 1e-12) {
                throw std::domain_error("bipartite density '" + label_ + "' is not Hermitian");
            }
        }
    }
}

Complex BipartiteDensity::element(int n, int m, int n2, int m2) const {
    if (n < 0 || m < 0 || n2 < 0 || m2 < 0 || n > cutoff_a_ || n2 > cutoff_a_ || m > cutoff_b_ ||
        m2 > cutoff_b_) {
        return 0.0;
    }
    if (a_) {
        return a_->element(n, n2) * b_->element(m, m2);
    }
    const auto dim = static_cast<std::size_t>(cutoff_a_ + 1) * (cutoff_b_ + 1);
    const auto row = static_cast<std::size_t>(n) * (cutoff_b_ + 1) + m;
    const auto col = static_cast<std::size_t>(n2) * (cutoff_b_ + 1) + m2;
    return dense_[row * dim + col];
}

double BipartiteDensity::trace() const {
    if (a_) {
        return a_->trace() * b_->trace();
    }
    long double sum = 0.0L;
    for (int n = 0; n <= cutoff_a_; ++n) {
        for (int m = 0; m <= cutoff_b_; ++m) {
            sum += element(n, m, n, m).real();
        }
    }
    return static_cast<double>(sum);
}

JointDistribution joint_fs_fs(int n, int m, const BeamSplitterSetting &bs, std::optional<int> grid_max) {
    if (n < 0 || m < 0) {
        throw std::domain_error("joint_fs_fs: photon numbers must be non-negative");
    }
    const int g = grid_max.value_or(n + m);
    if (g < n + m) {
        throw std::domain_error("joint_fs_fs: grid_max " + std::to_string(g) + " is below n+m = " +
                                std::to_string(n + m));
    }
    auto d = make_grid(g, bs, pair_label(fock(n).label(), fock(m).label()));
    const auto f = transform_fock_pair(n, m, bs);
    for (int p = 0; p <= n + m; ++p) {
        cell(d, p, n + m - p) = f[p] * f[p];
    }
    finalize(d, 1.0);
    return d;
}

JointDistribution joint_fs_pure(int n, const PureState &phi_b, const BeamSplitterSetting &bs,
                                std::optional<int> grid_max) {
    if (n < 0) {
        throw std::domain_error("joint_fs_pure: photon number must be non-negative");
    }
    auto d = make_grid(grid_max.value_or(n + phi_b.cutoff()), bs, pair_label(fock(n).label(), phi_b.label()));
    const auto support = photon_support(phi_b);
    parallel_for(0, static_cast<int>(support.size()), [&](int i) {
        const int m = support[i];
        const int s = n + m;
        const double w = phi_b.weight(m);
        const auto f = transform_fock_pair(n, m, bs);
        auto [lo, hi] = p_range(s, d.grid_max);
        for (int p = lo; p <= hi; ++p) {
            cell(d, p, s - p) = w * f[p] * f[p];
        }
    });
    finalize(d, phi_b.norm_squared());
    return d;
}

JointDistribution joint_fs_mixed(int n, const MixedState &rho_b, const BeamSplitterSetting &bs,
                                 std::optional<int> grid_max) {
    if (n < 0) {
        throw std::domain_error("joint_fs_mixed: photon number must be non-negative");
    }
    auto d = make_grid(grid_max.value_or(n + rho_b.cutoff()), bs, pair_label(fock(n).label(), rho_b.label()));
    const auto support = photon_support(rho_b);
    parallel_for(0, static_cast<int>(support.size()), [&](int i) {
        const int m = support[i];
        const int s = n + m;
        const double w = rho_b.population(m);
        const auto f = transform_fock_pair(n, m, bs);
        auto [lo, hi] = p_range(s, d.grid_max);
        for (int p = lo; p <= hi; ++p) {
            cell(d, p, s - p) = w * f[p] * f[p];
        }
    });
    finalize(d, rho_b.trace());
    return d;
}

JointDistribution joint_pure_pure(const PureState &psi_a, const PureState &phi_b, const BeamSplitterSetting &bs,
                                  std::optional<int> grid_max) {
    auto d = make_grid(grid_max.value_or(psi_a.cutoff() + phi_b.cutoff()), bs,
                       pair_label(psi_a.label(), phi_b.label()));
    const auto support_a = photon_support(psi_a);
    const int s_max = std::min(2 * d.grid_max, psi_a.cutoff() + phi_b.cutoff());
    parallel_for(0, s_max + 1, [&](int s) {
        auto [lo, hi] = p_range(s, d.grid_max);
        std::vector<Complex> amp(static_cast<std::size_t>(s) + 1, 0.0);
        for (int n : support_a) {
            const int m = s - n;
            if (m < 0 || m > phi_b.cutoff() || phi_b.amplitude(m) == Complex(0.0)) {
                continue;
            }
            const Complex w = psi_a.amplitude(n) * phi_b.amplitude(m);
            const auto f = transform_fock_pair(n, m, bs);
            for (int p = lo; p <= hi; ++p) {
                amp[p] += w * f[p];
            }
        }
        for (int p = lo; p <= hi; ++p) {
            cell(d, p, s - p) = std::norm(amp[p]);
        }
    });
    finalize(d, psi_a.norm_squared() * phi_b.norm_squared());
    return d;
}

JointDistribution joint_pure_mixed(const PureState &psi_a, const MixedState &rho_b, const BeamSplitterSetting &bs,
                                   std::optional<int> grid_max) {
    if (rho_b.hermiticity_residual() > 1e-12) {
        throw std::domain_error("joint_pure_mixed: b-mode density matrix is not Hermitian");
    }
    auto d = make_grid(grid_max.value_or(psi_a.cutoff() + rho_b.cutoff()), bs,
                       pair_label(psi_a.label(), rho_b.label()));
    const auto support_a = photon_support(psi_a);
    const int s_max = std::min(2 * d.grid_max, psi_a.cutoff() + rho_b.cutoff());
    parallel_for(0, s_max + 1, [&](int s) {
        std::vector<int> ns;
        for (int n : support_a) {
            if (s - n >= 0 && s - n <= rho_b.cutoff()) {
                ns.push_back(n);
            }
        }
        const auto k = ns.size();
        std::vector<Complex> kernel(k * k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                kernel[i * k + j] = psi_a.amplitude(ns[i]) * std::conj(psi_a.amplitude(ns[j])) *
                                    rho_b.element(s - ns[i], s - ns[j]);
            }
        }
        bilinear_antidiagonal(d, s, ns, kernel);
    });
    finalize(d, psi_a.norm_squared() * rho_b.trace());
    return d;
}

JointDistribution joint_general(const BipartiteDensity &rho, const BeamSplitterSetting &bs,
                                std::optional<int> grid_max) {
    auto d = make_grid(grid_max.value_or(rho.cutoff_a() + rho.cutoff_b()), bs, rho.label());
    const int s_max = std::min(2 * d.grid_max, rho.cutoff_a() + rho.cutoff_b());
    parallel_for(0, s_max + 1, [&](int s) {
        std::vector<int> ns;
        for (int n = std::max(0, s - rho.cutoff_b()); n <= std::min(s, rho.cutoff_a()); ++n) {
            ns.push_back(n);
        }
        const auto k = ns.size();
        std::vector<Complex> kernel(k * k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                kernel[i * k + j] = rho.element(ns[i], s - ns[i], ns[j], s - ns[j]);
            }
        }
        bilinear_antidiagonal(d, s, ns, kernel);
    });
    const double trace = rho.trace();
    finalize(d, trace);
    return d;
}

JointDistribution joint_distribution(const State &a, const State &b, const BeamSplitterSetting &bs,
                                     std::optional<int> grid_max) {
    if (const auto *psi = std::get_if<PureState>(&a)) {
        const auto support = photon_support(*psi);
        const bool is_fock = support.size() == 1 && psi->weight(support[0]) == 1.0;
        if (const auto *phi = std::get_if<PureState>(&b)) {
            if (is_fock) {
                return joint_fs_pure(support[0], *phi, bs, grid_max);
            }
            return joint_pure_pure(*psi, *phi, bs, grid_max);
        }
        const auto &rho_b = std::get<MixedState>(b);
        if (is_fock) {
            return joint_fs_mixed(support[0], rho_b, bs, grid_max);
        }
        return joint_pure_mixed(*psi, rho_b, bs, grid_max);
    }
    const auto &rho_a = std::get<MixedState>(a);
    const MixedState rho_b = std::holds_alternative<MixedState>(b) ? std::get<MixedState>(b)
                                                                   : to_density(std::get<PureState>(b));
    return joint_general(BipartiteDensity::product(rho_a, rho_b), bs, grid_max);
}

std::vector<int> photon_support(const PureState &state) {
    std::vector<int> out;
    for (int n = 0; n <= state.cutoff(); ++n) {
        if (state.amplitude(n) != Complex(0.0)) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<int> photon_support(const MixedState &state) {
    std::vector<int> out;
    for (int n = 0; n <= state.cutoff(); ++n) {
        if (state.population(n) != 0.0) {
            out.push_back(n);
        }
    }
    return out;
}

bool certify_zero(std::span<const int> a_support, int m_a, int m_b, const BigRational &transmittance) {
    for (int n : a_support) {
        if (!bs_prob_exact(n, m_a, m_b, transmittance).is_zero()) {
            return false;
        }
    }
    return true;
}

BigRational exact_fs_probability(int n, int m_a, int m_b, const BigRational &weight_b,
                                 const BigRational &transmittance) {
    if (m_a + m_b < n) {
        return BigRational(0);
    }
    return weight_b * bs_prob_exact(n, m_a, m_b, transmittance);
}

}  // namespace homlab
