#pragma once

// Beam-splitter coefficients f^{(n,m)}_p and the g-polynomial that carries all
// of their zeros.
//
// Convention: a^dagger -> a^dagger cos(theta/2) + b^dagger sin(theta/2),
//             b^dagger -> b^dagger cos(theta/2) - a^dagger sin(theta/2),
// so T = cos^2(theta/2), R = sin^2(theta/2) and theta = pi/2 is 50:50.

#include <string>
#include <vector>

#include "homlab/numerics.h"

namespace homlab {

/// Transmittance of a lossless beam splitter, either as an exact rational T or
/// as a floating angle theta in [0, pi].
class BeamSplitterSetting {
   public:
    /// Exact transmittance; 0 <= T <= 1 (domain_error otherwise).
    static BeamSplitterSetting exact(BigRational transmittance);
    /// Angle in radians; 0 <= theta <= pi (domain_error otherwise).
    static BeamSplitterSetting angle(double theta);

    bool is_exact() const { return exact_; }
    /// Only valid when is_exact().
    const BigRational &exact_transmittance() const;
    BigRational exact_reflectance() const;

    double theta() const;
    double cos_half() const;
    double sin_half() const;
    /// T and R as floats (exactly representable values stay exact).
    long double transmittance() const;
    long double reflectance() const;

    /// T as a RealValue (exact when is_exact()).
    RealValue transmittance_value() const;
    RealValue reflectance_value() const;

    /// theta -> pi - theta, i.e. T <-> R.
    BeamSplitterSetting mirrored() const;

    /// "T=1/2" or "theta=1.0471975511965976".
    std::string describe() const;

    friend bool operator==(const BeamSplitterSetting &a, const BeamSplitterSetting &b);

   private:
    BeamSplitterSetting() = default;

    bool exact_ = true;
    BigRational t_{1, 2};
    double theta_ = 0.0;
};

/// The 50:50 beam splitter, T = 1/2 exactly.
inline const BeamSplitterSetting kBalanced = BeamSplitterSetting::exact(BigRational(1, 2));

/// Two-mode Fock basis label |n, m>_ab.
struct FockPair {
    int n = 0;
    int m = 0;

    friend bool operator==(const FockPair &, const FockPair &) = default;
};

/// Bare g-polynomial sum_q C(n,q) (-1)^q (m_a)_{n-q} T^{n-q} (m_b)_q R^q.
/// Exact when bs is exact. The photon-number delta is the caller's business.
RealValue g_poly(int m_a, int m_b, int n, const BeamSplitterSetting &bs);

/// f^{(n,m)}_p: amplitude of |p, n+m-p> in U|n, m>.
/// Uses the compact g-polynomial form when every trig power is non-negative
/// and both trig bases are nonzero, and the expanded double sum otherwise.
double bs_coefficient(int n, int m, int p, const BeamSplitterSetting &bs);

/// Expanded double-sum form of f^{(n,m)}_p; always safe.
double bs_coefficient_double_sum(int n, int m, int p, const BeamSplitterSetting &bs);

/// Compact g-polynomial form of f^{(n,m)}_p with the negative-power trig factors
/// evaluated literally. Returns NaN when the form is singular (a zero base
/// raised to a negative power).
double bs_coefficient_compact(int n, int m, int p, const BeamSplitterSetting &bs);

/// |f^{(n, m_a+m_b-n)}_{m_a}|^2 exactly. Zero when m_a + m_b < n.
BigRational bs_prob_exact(int n, int m_a, int m_b, const BigRational &transmittance);

/// All coefficients f^{(n,m)}_p for p = 0..n+m.
std::vector<double> transform_fock_pair(int n, int m, const BeamSplitterSetting &bs);

/// For odd n, returns r with g(m', m', n) = (T - R) * r.
RealValue cos_factor_residual(int m_prime, int n, const BeamSplitterSetting &bs);

namespace detail {

/// D^n * g(m_a, m_b | n) for T = num/den, an exact integer.
BigInt g_scaled(std::int64_t m_a, std::int64_t m_b, int n, const BigInt &num, const BigInt &den);

/// n! as a long double (n <= 1700).
long double factorial_ld(int n);

}  // namespace detail

}  // namespace homlab
