#include "homlab/nodal.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "homlab/parallel.h"

namespace homlab {

namespace {

constexpr int kSmallOrder = 32;

bool fits_int128(const BigInt &v) {
    // |v| < 2^120 leaves headroom for the sign.
    return mpz_sizeinbase(v.get_mpz_t(), 2) < 120;
}

Int128 to_int128(const BigInt &v) {
    BigInt mag = abs(v);
    Int128 out = 0;
    const std::size_t limbs = mpz_size(mag.get_mpz_t());
    for (std::size_t i = limbs; i-- > 0;) {
        out = (out << 64) | static_cast<Int128>(mpz_getlimbn(mag.get_mpz_t(), i));
    }
    return sgn(v) < 0 ? -out : out;
}

// Prefix falling factorials (x)_0..(x)_n; `ok[j]` is false once (x)_j overflows.
void falling_prefix(std::int64_t x, int n, Int128 *value, bool *ok) {
    value[0] = 1;
    ok[0] = true;
    for (int j = 1; j <= n; ++j) {
        const Int128 factor = static_cast<Int128>(x) - (j - 1);
        if (ok[j - 1] && value[j - 1] == 0) {
            value[j] = 0;
            ok[j] = true;
            continue;
        }
        if (factor == 0) {
            value[j] = 0;
            ok[j] = true;
            continue;
        }
        ok[j] = ok[j - 1] && !__builtin_mul_overflow(value[j - 1], factor, &value[j]);
    }
}

}  // namespace

DiagonalReport cnl_scan(const JointDistribution &dist, double tolerance) {
    DiagonalReport report;
    report.tolerance = tolerance;
    report.cnl = true;
    for (int m = 0; m <= dist.grid_max; ++m) {
        const double v = dist.at(m, m);
        const bool pass = std::abs(v) < tolerance;
        report.entries.push_back({m, v, pass});
        report.max_value = std::max(report.max_value, v);
        report.cnl = report.cnl && pass;
    }
    return report;
}

ScaledG::ScaledG(int n, const BigRational &transmittance) : n_(n) {
    if (n < 0) {
        throw std::domain_error("g-polynomial order must be non-negative");
    }
    if (transmittance.sign() < 0 || transmittance > BigRational(1)) {
        throw std::domain_error("transmittance must lie in [0, 1]");
    }
    const BigInt p = transmittance.numerator();
    const BigInt d = transmittance.denominator();
    const BigInt r = d - p;
    small_ = n <= kSmallOrder;
    for (int q = 0; q <= n; ++q) {
        BigInt tp;
        BigInt rp;
        mpz_pow_ui(tp.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n - q));
        mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(q));
        BigInt c = binomial(n, q) * tp * rp;
        if (q % 2 == 1) {
            c = -c;
        }
        small_ = small_ && fits_int128(c);
        coeffs_.push_back(c);
    }
    if (small_) {
        for (const auto &c : coeffs_) {
            small_coeffs_.push_back(to_int128(c));
        }
    }
}

BigInt ScaledG::operator()(std::int64_t m_a, std::int64_t m_b) const {
    BigInt total = 0;
    for (int q = 0; q <= n_; ++q) {
        if (sgn(coeffs_[q]) == 0) {
            continue;
        }
        BigInt fa = falling_factorial(m_a, n_ - q);
        if (sgn(fa) == 0) {
            continue;
        }
        total += coeffs_[q] * fa * falling_factorial(m_b, q);
    }
    return total;
}

bool ScaledG::is_zero(std::int64_t m_a, std::int64_t m_b) const {
    if (small_) {
        std::array<Int128, kSmallOrder + 1> fa{};
        std::array<Int128, kSmallOrder + 1> fb{};
        std::array<bool, kSmallOrder + 1> ok_a{};
        std::array<bool, kSmallOrder + 1> ok_b{};
        falling_prefix(m_a, n_, fa.data(), ok_a.data());
        falling_prefix(m_b, n_, fb.data(), ok_b.data());
        Int128 total = 0;
        bool ok = true;
        for (int q = 0; q <= n_ && ok; ++q) {
            const Int128 c = small_coeffs_[q];
            const int ja = n_ - q;
            if (c == 0 || (ok_a[ja] && fa[ja] == 0) || (ok_b[q] && fb[q] == 0)) {
                continue;
            }
            Int128 term = 0;
            ok = ok_a[ja] && ok_b[q] && !__builtin_mul_overflow(c, fa[ja], &term) &&
                 !__builtin_mul_overflow(term, fb[q], &term) && !__builtin_add_overflow(total, term, &total);
        }
        if (ok) {
            return total == 0;
        }
    }
    return sgn((*this)(m_a, m_b)) == 0;
}

bool ZeroSet::contains(std::int64_t m_a, std::int64_t m_b) const {
    return std::binary_search(zeros.begin(), zeros.end(), Zero{m_a, m_b, false},
                              [](const Zero &x, const Zero &y) {
                                  return std::pair(x.m_a, x.m_b) < std::pair(y.m_a, y.m_b);
                              });
}

ZeroSet bfs_zeros(int n, const BigRational &transmittance, int m_max, int m_a_min) {
    if (m_max < 0 || m_a_min < 0) {
        throw std::domain_error("bfs_zeros: bounds must be non-negative");
    }
    const ScaledG g(n, transmittance);
    ZeroSet set;
    set.n = n;
    set.transmittance = transmittance;
    set.m_max = m_max;
    set.m_a_min = m_a_min;
    if (m_a_min > m_max) {
        return set;
    }
    const int rows = m_max - m_a_min + 1;
    std::vector<std::vector<Zero>> found(static_cast<std::size_t>(rows));
    parallel_for(0, rows, [&](int i) {
        const std::int64_t m_a = m_a_min + i;
        for (std::int64_t m_b = 0; m_b <= m_max; ++m_b) {
            if (g.is_zero(m_a, m_b)) {
                found[i].push_back({m_a, m_b, m_a + m_b >= n});
            }
        }
    });
    for (auto &row : found) {
        set.zeros.insert(set.zeros.end(), row.begin(), row.end());
    }
    return set;
}

std::optional<std::pair<std::int64_t, std::int64_t>> extremal_branch_points(std::int64_t m_a, std::int64_t k) {
    const std::int64_t disc = 1 + 8 * m_a + k;
    if (disc < 0) {
        return std::nullopt;
    }
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
    while (root * root > disc) {
        --root;
    }
    while ((root + 1) * (root + 1) <= disc) {
        ++root;
    }
    if (root * root != disc || root % 2 == 0) {
        return std::nullopt;
    }
    const std::int64_t plus = m_a + (1 + root) / 2;
    const std::int64_t minus = m_a + (1 - root) / 2;
    if (plus < 0 || minus < 0) {
        return std::nullopt;
    }
    return std::pair(plus, minus);
}

std::vector<TableRow> appendix_c_tables() {
    const BigRational half(1, 2);
    const BigRational three_quarters(3, 4);
    auto row = [](std::string table, int index, std::vector<std::int64_t> a, std::vector<std::int64_t> b, int n,
                  const BigRational &t) { return TableRow{std::move(table), index, ParametricSolution{a, b, n, t}}; };
    // coefficients listed constant term first
    return {
        row("I", 1, {0, -1, 2}, {1, -3, 2}, 2, half),
        row("I", 2, {0, 1, 2}, {1, 3, 2}, 2, half),
        row("I", 3, {0, 1, 8}, {1, 6, 8}, 2, half),
        row("I", 4, {3, -5, 2}, {1, -3, 2}, 2, half),
        row("I", 5, {1, 3, 2}, {3, 5, 2}, 2, half),
        row("I", 6, {1, 6, 8}, {3, 10, 8}, 2, half),
        row("I", 7, {3, 5, 2}, {6, 7, 2}, 2, half),
        row("I", 8, {6, 7, 2}, {10, 9, 2}, 2, half),
        row("II", 1, {0, 1}, {0, 1}, 3, half),
        row("II", 2, {2, 7, 6}, {7, 13, 6}, 3, half),
        row("II", 3, {1, 5, 6}, {5, 11, 6}, 3, half),
        row("III", 1, {0, 1, 12}, {0, -9, 36}, 2, three_quarters),
        row("III", 2, {0, 1, 12}, {1, 15, 36}, 2, three_quarters),
        row("III", 3, {1, 7, 12}, {0, 9, 36}, 2, three_quarters),
        row("III", 4, {1, 7, 12}, {7, 33, 36}, 2, three_quarters),
        row("III", 5, {6, 17, 12}, {10, 39, 36}, 2, three_quarters),
        row("III", 6, {11, 23, 12}, {22, 57, 36}, 2, three_quarters),
    };
}

}  // namespace homlab
