#pragma once

// Collective spin states of 2J two-level atoms. Through the Schwinger map
// |J, M> <-> |J+M, J-M> a rotation acts like a beam splitter, and the Wigner
// elements d^J_{M',M} are beam-splitter coefficients.
//
// Half-integers are passed as twice their value (two_j = 2J, two_m = 2M).

#include <string>
#include <vector>

#include "homlab/beam_splitter.h"
#include "homlab/states.h"

namespace homlab {

/// Amplitudes c_M for M = -J, -J+1, ..., J.
class AngularState {
   public:
    /// Needs exactly 2J+1 amplitudes with total weight within kDefaultNormTolerance of 1.
    AngularState(int two_j, std::vector<Complex> amplitudes);

    int two_j() const { return two_j_; }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    /// c_M, 0 when |M| > J or J - M is not an integer.
    Complex amplitude(int two_m) const;

    /// The Dicke state |J, M>.
    static AngularState dicke(int two_j, int two_m);

   private:
    int two_j_;
    std::vector<Complex> amps_;
};

/// (n, m) = (J+M, J-M). domain_error when |M| > J or J - M is not an integer.
FockPair jm_to_fock(int two_j, int two_m);

/// d^J_{M',M}(theta) = f^{(J+M, J-M)}_{J+M'}.
double wigner_d(int two_j, int two_m_prime, int two_m, const BeamSplitterSetting &bs);
double wigner_d(int two_j, int two_m_prime, int two_m, double theta);

/// P(M') = |sum_M c_M d^J_{M',M}|^2, indexed by M' = -J..J.
std::vector<double> atomic_distribution(const AngularState &state, const BeamSplitterSetting &bs);
std::vector<double> atomic_distribution(const AngularState &state, double theta);

struct AtomicCnlEntry {
    int two_j = 0;
    int two_m = 0;
    FockPair fock;
    /// Probability of M' = 0 after the rotation, starting from |J, M>.
    double p_center = 0.0;
};

/// P(M' = 0) for every Dicke input |J, M> with integer J in [j_min, j_max].
/// Inputs with J + M odd give zero at the balanced rotation; across atom
/// numbers these zeros form the atomic counterpart of the central nodal line.
std::vector<AtomicCnlEntry> atomic_cnl_sweep(int j_min, int j_max, const BeamSplitterSetting &bs);

}  // namespace homlab
