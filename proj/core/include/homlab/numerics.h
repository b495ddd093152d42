#pragma once

// Exact integer / rational arithmetic and the combinatorial primitives used by
// every other module. BigInt and BigRational are thin value types over GMP.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace homlab {

using BigInt = mpz_class;

/// Default tolerance for deciding that a floating value is zero.
inline constexpr double kDefaultZeroTolerance = 1e-12;

/// Exact ratio of arbitrary-precision integers, always in canonical form
/// (denominator > 0, gcd(|num|, den) == 1).
class BigRational {
   public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}
    BigRational(int value) : q_(static_cast<long>(value)) {}
    BigRational(const BigInt &value) : q_(value) {}
    BigRational(const BigInt &num, const BigInt &den);
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q", "p", or a finite decimal such as "0.75" (exactly 3/4).
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const;

    BigRational &operator+=(const BigRational &o) { q_ += o.q_; return *this; }
    BigRational &operator-=(const BigRational &o) { q_ -= o.q_; return *this; }
    BigRational &operator*=(const BigRational &o) { q_ *= o.q_; return *this; }
    BigRational &operator/=(const BigRational &o);

    friend BigRational operator+(BigRational a, const BigRational &b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational &b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational &b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational &b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational &a, const BigRational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational &a, const BigRational &b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents invert (domain_error on 0^negative).
    BigRational pow(int exponent) const;

    const mpq_class &raw() const { return q_; }

   private:
    mpq_class q_;
};

std::ostream &operator<<(std::ostream &out, const BigRational &value);

/// Either an exact rational or a double. Mixed arithmetic promotes to double.
class RealValue {
   public:
    RealValue() : v_(BigRational{}) {}
    RealValue(BigRational exact) : v_(std::move(exact)) {}
    RealValue(double approx) : v_(approx) {}

    bool is_exact() const { return std::holds_alternative<BigRational>(v_); }
    const BigRational &exact() const;
    double to_double() const;

    /// Exact values ignore `tol`; floats compare |x| <= tol.
    bool is_zero(double tol = kDefaultZeroTolerance) const;

    friend RealValue operator+(const RealValue &a, const RealValue &b);
    friend RealValue operator-(const RealValue &a, const RealValue &b);
    friend RealValue operator*(const RealValue &a, const RealValue &b);
    friend RealValue operator/(const RealValue &a, const RealValue &b);

   private:
    std::variant<BigRational, double> v_;
};

/// (x)_q = x (x-1) ... (x-q+1); (x)_0 = 1. Defined for every integer x.
BigInt falling_factorial(std::int64_t x, int q);

/// Binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Same as binomial() but as a double (used by floating code paths).
double binomial_double(int n, int k);

/// n! as a double.
double factorial_double(int n);

}  // namespace homlab
