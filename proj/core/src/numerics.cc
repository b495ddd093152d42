#include "homlab/numerics.h"

#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace homlab {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

}  // namespace

BigRational::BigRational(const BigInt &num, const BigInt &den) {
    if (sgn(den) == 0) {
        throw std::domain_error("BigRational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("BigRational: zero denominator in '" + std::string(text) + "'");
        }
        return BigRational(parse_integer(text.substr(0, slash)), den);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return BigRational(parse_integer(text));
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") {
        digits += "0";
    }
    digits += frac;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
        scale *= 10;
    }
    if (frac.empty()) {
        throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
    }
    BigInt num = parse_integer(digits);
    return BigRational(num, scale);
}

std::string BigRational::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_str();
}

BigRational &BigRational::operator/=(const BigRational &o) {
    if (o.is_zero()) {
        throw std::domain_error("BigRational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
}

BigRational BigRational::pow(int exponent) const {
    if (exponent < 0) {
        if (is_zero()) {
            throw std::domain_error("BigRational: zero to a negative power");
        }
        return BigRational(1) / pow(-exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    BigRational r;
    r.q_ = mpq_class(num, den);  // already coprime
    return r;
}

std::ostream &operator<<(std::ostream &out, const BigRational &value) {
    return out << value.str();
}

const BigRational &RealValue::exact() const {
    if (!is_exact()) {
        throw std::logic_error("RealValue: not an exact value");
    }
    return std::get<BigRational>(v_);
}

double RealValue::to_double() const {
    if (is_exact()) {
        return std::get<BigRational>(v_).to_double();
    }
    return std::get<double>(v_);
}

bool RealValue::is_zero(double tol) const {
    if (is_exact()) {
        return std::get<BigRational>(v_).is_zero();
    }
    return std::abs(std::get<double>(v_)) <= tol;
}

namespace {

template <typename ExactOp, typename FloatOp>
RealValue combine(const RealValue &a, const RealValue &b, ExactOp exact_op, FloatOp float_op) {
    if (a.is_exact() && b.is_exact()) {
        return RealValue(exact_op(a.exact(), b.exact()));
    }
    return RealValue(float_op(a.to_double(), b.to_double()));
}

}  // namespace

RealValue operator+(const RealValue &a, const RealValue &b) {
    return combine(a, b, std::plus<BigRational>{}, std::plus<double>{});
}
RealValue operator-(const RealValue &a, const RealValue &b) {
    return combine(a, b, std::minus<BigRational>{}, std::minus<double>{});
}
RealValue operator*(const RealValue &a, const RealValue &b) {
    return combine(a, b, std::multiplies<BigRational>{}, std::multiplies<double>{});
}
RealValue operator/(const RealValue &a, const RealValue &b) {
    return combine(a, b, std::divides<BigRational>{}, std::divides<double>{});
}

BigInt falling_factorial(std::int64_t x, int q) {
    if (q < 0) {
        throw std::domain_error("falling_factorial: negative order");
    }
    BigInt r = 1;
    for (int i = 0; i < q; ++i) {
        const std::int64_t f = x - i;
        if (f == 0) {
            return 0;
        }
        r *= static_cast<long>(f);
    }
    return r;
}

BigInt binomial(int n, int k) {
    if (n < 0) {
        throw std::domain_error("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

double binomial_double(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    return binomial(n, k).get_d();
}

double factorial_double(int n) {
    if (n < 0) {
        throw std::domain_error("factorial_double: negative argument");
    }
    double r = 1.0;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

}  // namespace homlab
