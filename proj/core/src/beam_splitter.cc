#include "homlab/beam_splitter.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace homlab {

BeamSplitterSetting BeamSplitterSetting::exact(BigRational transmittance) {
    if (transmittance.sign() < 0 || transmittance > BigRational(1)) {
        throw std::domain_error("beam splitter transmittance must lie in [0, 1], got " +
                                transmittance.str());
    }
    BeamSplitterSetting s;
    s.exact_ = true;
    s.t_ = std::move(transmittance);
    s.theta_ = 2.0 * std::acos(std::sqrt(s.t_.to_double()));
    return s;
}

BeamSplitterSetting BeamSplitterSetting::angle(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw std::domain_error("beam splitter angle must lie in [0, pi]");
    }
    BeamSplitterSetting s;
    s.exact_ = false;
    s.theta_ = theta;
    return s;
}

const BigRational &BeamSplitterSetting::exact_transmittance() const {
    if (!exact_) {
        throw std::logic_error("beam splitter setting is an angle, not an exact transmittance");
    }
    return t_;
}

BigRational BeamSplitterSetting::exact_reflectance() const { return BigRational(1) - exact_transmittance(); }

double BeamSplitterSetting::theta() const { return theta_; }

double BeamSplitterSetting::cos_half() const {
    return exact_ ? std::sqrt(t_.to_double()) : std::cos(theta_ / 2.0);
}

double BeamSplitterSetting::sin_half() const {
    return exact_ ? std::sqrt((BigRational(1) - t_).to_double()) : std::sin(theta_ / 2.0);
}

long double BeamSplitterSetting::transmittance() const {
    if (exact_) {
        return static_cast<long double>(t_.to_double());
    }
    long double c = std::cos(static_cast<long double>(theta_) / 2.0L);
    return c * c;
}

long double BeamSplitterSetting::reflectance() const {
    if (exact_) {
        return static_cast<long double>((BigRational(1) - t_).to_double());
    }
    long double s = std::sin(static_cast<long double>(theta_) / 2.0L);
    return s * s;
}

RealValue BeamSplitterSetting::transmittance_value() const {
    return exact_ ? RealValue(t_) : RealValue(static_cast<double>(transmittance()));
}

RealValue BeamSplitterSetting::reflectance_value() const {
    return exact_ ? RealValue(BigRational(1) - t_) : RealValue(static_cast<double>(reflectance()));
}

BeamSplitterSetting BeamSplitterSetting::mirrored() const {
    if (exact_) {
        return exact(BigRational(1) - t_);
    }
    return angle(std::numbers::pi - theta_);
}

std::string BeamSplitterSetting::describe() const {
    if (exact_) {
        return "T=" + t_.str();
    }
    std::ostringstream out;
    out.precision(17);
    out << "theta=" << theta_;
    return out.str();
}

bool operator==(const BeamSplitterSetting &a, const BeamSplitterSetting &b) {
    if (a.exact_ != b.exact_) {
        return false;
    }
    return a.exact_ ? a.t_ == b.t_ : a.theta_ == b.theta_;
}

namespace detail {

BigInt g_scaled(std::int64_t m_a, std::int64_t m_b, int n, const BigInt &num, const BigInt &den) {
    const BigInt rnum = den - num;
    BigInt total = 0;
    for (int q = 0; q <= n; ++q) {
        BigInt fa = falling_factorial(m_a, n - q);
        if (sgn(fa) == 0) {
            continue;
        }
        BigInt fb = falling_factorial(m_b, q);
        if (sgn(fb) == 0) {
            continue;
        }
        BigInt tp;
        BigInt rp;
        mpz_pow_ui(tp.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n - q));
        mpz_pow_ui(rp.get_mpz_t(), rnum.get_mpz_t(), static_cast<unsigned long>(q));
        BigInt term = binomial(n, q) * fa * fb * tp * rp;
        if (q % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

long double factorial_ld(int n) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(1701);
        t[0] = 1.0L;
        for (int i = 1; i <= 1700; ++i) {
            t[i] = t[i - 1] * static_cast<long double>(i);
        }
        return t;
    }();
    if (n < 0 || n > 1700) {
        throw std::domain_error("factorial_ld: argument out of range");
    }
    return table[static_cast<std::size_t>(n)];
}

}  // namespace detail

namespace {

long double binomial_ld(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0L;
    }
    return detail::factorial_ld(n) / (detail::factorial_ld(k) * detail::factorial_ld(n - k));
}

// Float g-polynomial. Terms q and n-q are combined before being added to the
// total; with T == R and m_a == m_b the two terms are bitwise equal, so the
// diagonal of an odd-n polynomial at the balanced splitter comes out as an
// exact zero. `scale` receives the largest term magnitude.
long double g_float(int m_a, int m_b, int n, long double t, long double r, long double *scale = nullptr) {
    std::vector<long double> fa(static_cast<std::size_t>(n) + 1);
    std::vector<long double> fb(fa.size());
    std::vector<long double> tp(fa.size());
    std::vector<long double> rp(fa.size());
    fa[0] = fb[0] = tp[0] = rp[0] = 1.0L;
    for (int j = 1; j <= n; ++j) {
        fa[j] = fa[j - 1] * static_cast<long double>(m_a - j + 1);
        fb[j] = fb[j - 1] * static_cast<long double>(m_b - j + 1);
        tp[j] = tp[j - 1] * t;
        rp[j] = rp[j - 1] * r;
    }
    auto term = [&](int q) {
        long double v = binomial_ld(n, q) * (fa[n - q] * fb[q]) * (tp[n - q] * rp[q]);
        return (q % 2 == 0) ? v : -v;
    };
    long double total = 0.0L;
    long double biggest = 0.0L;
    for (int q = 0; 2 * q <= n; ++q) {
        const long double lo = term(q);
        biggest = std::max(biggest, std::abs(lo));
        if (2 * q == n) {
            total += lo;
            continue;
        }
        const long double hi = term(n - q);
        biggest = std::max(biggest, std::abs(hi));
        total += lo + hi;
    }
    if (scale != nullptr) {
        *scale = biggest;
    }
    return total;
}

long double g_exact_ld(int m_a, int m_b, int n, const BigRational &t) {
    BigInt scaled = detail::g_scaled(m_a, m_b, n, t.numerator(), t.denominator());
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), t.denominator().get_mpz_t(), static_cast<unsigned long>(n));
    return static_cast<long double>(BigRational(scaled, den).to_double());
}

// For exact settings, results that look like cancellation down to rounding
// noise are recomputed exactly so that true zeros come out as 0.
long double g_as_long_double(int m_a, int m_b, int n, const BeamSplitterSetting &bs) {
    long double scale = 0.0L;
    const long double v = g_float(m_a, m_b, n, bs.transmittance(), bs.reflectance(), &scale);
    if (bs.is_exact() && std::abs(v) <= 1e-9L * scale) {
        return g_exact_ld(m_a, m_b, n, bs.exact_transmittance());
    }
    return v;
}

void check_coefficient_args(int n, int m, int p) {
    if (n < 0 || m < 0) {
        throw std::domain_error("bs_coefficient: photon numbers must be non-negative");
    }
    if (p < 0 || p > n + m) {
        throw std::domain_error("bs_coefficient: p must lie in [0, n+m]");
    }
}

}  // namespace

RealValue g_poly(int m_a, int m_b, int n, const BeamSplitterSetting &bs) {
    if (m_a < 0 || m_b < 0 || n < 0) {
        throw std::domain_error("g_poly: arguments must be non-negative");
    }
    if (bs.is_exact()) {
        const BigRational &t = bs.exact_transmittance();
        BigInt scaled = detail::g_scaled(m_a, m_b, n, t.numerator(), t.denominator());
        BigInt den;
        mpz_pow_ui(den.get_mpz_t(), t.denominator().get_mpz_t(), static_cast<unsigned long>(n));
        return RealValue(BigRational(scaled, den));
    }
    return RealValue(static_cast<double>(g_float(m_a, m_b, n, bs.transmittance(), bs.reflectance())));
}

double bs_coefficient_double_sum(int n, int m, int p, const BeamSplitterSetting &bs) {
    check_coefficient_args(n, m, p);
    const long double c = bs.cos_half();
    const long double s = bs.sin_half();
    const long double norm = std::sqrt(detail::factorial_ld(p) * detail::factorial_ld(n + m - p) /
                                       (detail::factorial_ld(n) * detail::factorial_ld(m)));
    long double total = 0.0L;
    const int q_lo = std::max(0, p - m);
    const int q_hi = std::min(n, p);
    for (int q = q_lo; q <= q_hi; ++q) {
        const int qb = p - q;  // a^dagger factors drawn from the b-mode operator
        long double term = binomial_ld(n, q) * binomial_ld(m, qb) * std::pow(c, m + q - qb) *
                           std::pow(s, n - q + qb);
        total += (qb % 2 == 0) ? term : -term;
    }
    return static_cast<double>(norm * total);
}

double bs_coefficient_compact(int n, int m, int p, const BeamSplitterSetting &bs) {
    check_coefficient_args(n, m, p);
    const long double c = bs.cos_half();
    const long double s = bs.sin_half();
    if ((c == 0.0L && m - p < 0) || (s == 0.0L && p - n < 0)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const long double g = g_as_long_double(p, n + m - p, n, bs);
    // sqrt(C(m+n, p)) / sqrt(n! (m+n)_n), with (m+n)_n = (m+n)! / m!
    const long double norm = std::sqrt(binomial_ld(m + n, p) * detail::factorial_ld(m) /
                                       (detail::factorial_ld(n) * detail::factorial_ld(m + n)));
    const long double sign = ((p + n) % 2 == 0) ? 1.0L : -1.0L;
    return static_cast<double>(sign * norm * std::pow(c, m - p) * std::pow(s, p - n) * g);
}

double bs_coefficient(int n, int m, int p, const BeamSplitterSetting &bs) {
    check_coefficient_args(n, m, p);
    const bool safe_powers = m - p >= 0 && p - n >= 0;
    const bool nonzero_bases = bs.cos_half() != 0.0 && bs.sin_half() != 0.0;
    if (safe_powers && nonzero_bases) {
        return bs_coefficient_compact(n, m, p, bs);
    }
    return bs_coefficient_double_sum(n, m, p, bs);
}

BigRational bs_prob_exact(int n, int m_a, int m_b, const BigRational &transmittance) {
    if (n < 0 || m_a < 0 || m_b < 0) {
        throw std::domain_error("bs_prob_exact: arguments must be non-negative");
    }
    if (transmittance.sign() < 0 || transmittance > BigRational(1)) {
        throw std::domain_error("bs_prob_exact: transmittance must lie in [0, 1]");
    }
    if (m_a + m_b < n) {
        return BigRational(0);
    }
    const BigRational &t = transmittance;
    const BigRational r = BigRational(1) - t;
    const int total = m_a + m_b;
    // C(m_a+m_b, m_a) / (n! (m_a+m_b)_n)
    BigRational prefactor(binomial(total, m_a), falling_factorial(total, n) * falling_factorial(n, n));

    std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q) {
        a[q] = binomial(n, q) * falling_factorial(m_a, n - q) * falling_factorial(m_b, q);
        if (q % 2 == 1) {
            a[q] = -a[q];
        }
    }
    // |f|^2 = prefactor * g^2 T^{m_b-n} R^{m_a-n}; expanding g^2 term by term
    // leaves only non-negative powers on every surviving term.
    BigRational sum(0);
    for (int q = 0; q <= n; ++q) {
        if (sgn(a[q]) == 0) {
            continue;
        }
        for (int q2 = 0; q2 <= n; ++q2) {
            if (sgn(a[q2]) == 0) {
                continue;
            }
            const int t_exp = n - q - q2 + m_b;
            const int r_exp = q + q2 + m_a - n;
            sum += BigRational(a[q] * a[q2]) * t.pow(t_exp) * r.pow(r_exp);
        }
    }
    return prefactor * sum;
}

std::vector<double> transform_fock_pair(int n, int m, const BeamSplitterSetting &bs) {
    if (n < 0 || m < 0) {
        throw std::domain_error("transform_fock_pair: photon numbers must be non-negative");
    }
    std::vector<double> out(static_cast<std::size_t>(n + m) + 1);
    for (int p = 0; p <= n + m; ++p) {
        out[p] = bs_coefficient(n, m, p, bs);
    }
    return out;
}

RealValue cos_factor_residual(int m_prime, int n, const BeamSplitterSetting &bs) {
    if (n < 1 || n % 2 == 0) {
        throw std::domain_error("cos_factor_residual: n must be odd and positive");
    }
    if (m_prime < 0) {
        throw std::domain_error("cos_factor_residual: m' must be non-negative");
    }
    const RealValue x = bs.transmittance_value();
    const RealValue y = bs.reflectance_value();
    auto power = [](const RealValue &base, int e) {
        RealValue r = base.is_exact() ? RealValue(BigRational(1)) : RealValue(1.0);
        for (int i = 0; i < e; ++i) {
            r = r * base;
        }
        return r;
    };
    const bool exact = bs.is_exact();
    auto make = [exact](const BigInt &v) { return exact ? RealValue(BigRational(v)) : RealValue(v.get_d()); };

    RealValue total = exact ? RealValue(BigRational(0)) : RealValue(0.0);
    for (int q = 0; q <= (n - 1) / 2; ++q) {
        BigInt coeff = binomial(n, q) * falling_factorial(m_prime, n - q) * falling_factorial(m_prime, q);
        if (q % 2 == 1) {
            coeff = -coeff;
        }
        if (sgn(coeff) == 0) {
            continue;
        }
        RealValue inner = exact ? RealValue(BigRational(0)) : RealValue(0.0);
        for (int k = 1; k <= n - 2 * q; ++k) {
            inner = inner + power(x, n - 2 * q - k) * power(y, k - 1);
        }
        total = total + make(coeff) * power(x, q) * power(y, q) * inner;
    }
    return total;
}

}  // namespace homlab
