#pragma once

// Nodal structure of the output distributions: diagonal (CNL) scans, exact
// integer zeros of the g-polynomial, and polynomial families of zeros.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/joint_distribution.h"
#include "homlab/numerics.h"

namespace homlab {

__extension__ typedef __int128 Int128;

struct DiagonalEntry {
    int m = 0;
    double value = 0.0;
    bool pass = false;  // value < tolerance
};

struct DiagonalReport {
    double tolerance = 0.0;
    std::vector<DiagonalEntry> entries;
    double max_value = 0.0;
    /// True when every diagonal entry passes.
    bool cnl = false;
};

DiagonalReport cnl_scan(const JointDistribution &dist, double tolerance = 1e-14);

/// Exact evaluation of D^n g(m_a, m_b | n) for T = P/D at arbitrary integer
/// arguments (negative ones through the product definition of the falling
/// factorial). Zero tests use 128-bit arithmetic and fall back to GMP on overflow.
class ScaledG {
   public:
    ScaledG(int n, const BigRational &transmittance);

    int n() const { return n_; }
    BigInt operator()(std::int64_t m_a, std::int64_t m_b) const;
    bool is_zero(std::int64_t m_a, std::int64_t m_b) const;

   private:
    int n_;
    std::vector<BigInt> coeffs_;  // C(n,q) (-1)^q P^{n-q} (D-P)^q
    std::vector<Int128> small_coeffs_;
    bool small_ = false;
};

struct Zero {
    std::int64_t m_a = 0;
    std::int64_t m_b = 0;
    /// m_a + m_b >= n, i.e. reachable from |n, m> with m >= 0.
    bool physical = false;

    friend bool operator==(const Zero &, const Zero &) = default;
};

struct ZeroSet {
    int n = 0;
    BigRational transmittance;
    int m_max = 0;
    int m_a_min = 0;
    /// Sorted by (m_a, m_b).
    std::vector<Zero> zeros;

    bool contains(std::int64_t m_a, std::int64_t m_b) const;
};

/// Every (m_a, m_b) with m_a_min <= m_a <= m_max, 0 <= m_b <= m_max and
/// g(m_a, m_b | n) = 0 exactly at T.
ZeroSet bfs_zeros(int n, const BigRational &transmittance, int m_max, int m_a_min = 0);

/// Pair of integer polynomials (m_a(k), m_b(k)), coefficients listed from the
/// constant term up.
struct ParametricSolution {
    std::vector<std::int64_t> a_coeffs;
    std::vector<std::int64_t> b_coeffs;
    int n = 0;
    BigRational transmittance;

    std::int64_t m_a(std::int64_t k) const;
    std::int64_t m_b(std::int64_t k) const;
    /// Both coordinates non-negative at k.
    bool physical_at(std::int64_t k) const;
    /// The k in [k_lo, k_hi] where physical_at holds.
    std::vector<std::int64_t> valid_k(std::int64_t k_lo, std::int64_t k_hi) const;
    /// "(2k^2-k, 2k^2-3k+1)".
    std::string str() const;

    friend bool operator==(const ParametricSolution &, const ParametricSolution &) = default;
};

struct ParametricVerdict {
    bool valid = false;
    /// g(m_a(k), m_b(k) | n) as a polynomial in k, constant term first.
    std::vector<BigRational> coefficients;
    /// Values at k = 0..3n.
    std::vector<BigRational> point_values;
    /// Lowest-degree nonzero coefficient when invalid.
    std::optional<std::pair<int, BigRational>> first_nonzero;
    /// The expansion and point-evaluation certificates reached the same answer.
    bool certificates_agree = false;
};

/// Degree of each coordinate must be at most 3 (domain_error otherwise).
ParametricVerdict verify_parametric(const ParametricSolution &solution);

/// Representative of the family under k -> k + c and k -> -k + c. Minimizes the
/// sum of |coefficients|; ties go to positive leading coefficients, then to the
/// lexicographically smallest (a0, a1, ..., b0, b1, ...). Trailing zero
/// coefficients are dropped.
ParametricSolution canonicalize(const ParametricSolution &solution);

/// All non-constant polynomial pairs of the given degree (2 or 3) with every
/// coefficient in [lo, hi] that identically solve g = 0, canonicalized,
/// deduplicated and sorted. Output does not depend on the worker count.
std::vector<ParametricSolution> search_parametric(int n, const BigRational &transmittance, int degree,
                                                  std::int64_t lo, std::int64_t hi);

/// n = 2, T = 1/2 extremal points m_b = m_a + (1 +/- sqrt(1 + 8 m_a + k)) / 2,
/// returned when both are non-negative integers.
std::optional<std::pair<std::int64_t, std::int64_t>> extremal_branch_points(std::int64_t m_a, std::int64_t k);

struct TableRow {
    std::string table;  // "I", "II", "III"
    int row = 0;
    ParametricSolution solution;
};

/// The published parametric families at (n=2, T=1/2), (n=3, T=1/2) and (n=2, T=3/4).
std::vector<TableRow> appendix_c_tables();

}  // namespace homlab
