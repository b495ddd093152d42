#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "homlab/nodal.h"
#include "homlab/parallel.h"

namespace homlab {

namespace {

using IntPoly = std::vector<BigInt>;
using Coeffs = std::vector<std::int64_t>;

std::int64_t evaluate(const Coeffs &c, std::int64_t k) {
    std::int64_t v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        v = v * k + *it;
    }
    return v;
}

Coeffs trimmed(Coeffs c) {
    while (c.size() > 1 && c.back() == 0) {
        c.pop_back();
    }
    if (c.empty()) {
        c.push_back(0);
    }
    return c;
}

IntPoly multiply(const IntPoly &x, const IntPoly &y) {
    IntPoly out(x.size() + y.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return out;
}

// (p(k))_j as a polynomial in k.
IntPoly falling_poly(const Coeffs &p, int j) {
    IntPoly out{BigInt(1)};
    for (int i = 0; i < j; ++i) {
        IntPoly factor;
        for (auto c : p) {
            factor.emplace_back(static_cast<long>(c));
        }
        factor[0] -= i;
        out = multiply(out, factor);
    }
    return out;
}

// Coefficients of p(k + c).
Coeffs shifted(const Coeffs &p, std::int64_t c) {
    Coeffs out(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        // a_i (k + c)^i = a_i sum_j C(i, j) c^{i-j} k^j
        std::int64_t binom = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            std::int64_t cp = 1;
            for (std::size_t e = 0; e < i - j; ++e) {
                cp *= c;
            }
            out[j] += p[i] * binom * cp;
            binom = binom * static_cast<std::int64_t>(i - j) / static_cast<std::int64_t>(j + 1);
        }
    }
    return out;
}

Coeffs reflected(const Coeffs &p) {
    Coeffs out = p;
    for (std::size_t i = 1; i < out.size(); i += 2) {
        out[i] = -out[i];
    }
    return out;
}

std::int64_t abs_sum(const Coeffs &a, const Coeffs &b) {
    std::int64_t s = 0;
    for (auto v : a) {
        s += v < 0 ? -v : v;
    }
    for (auto v : b) {
        s += v < 0 ? -v : v;
    }
    return s;
}

// Ordering used for canonical representatives and for search output.
bool key_less(const ParametricSolution &x, const ParametricSolution &y) {
    const auto sx = abs_sum(x.a_coeffs, x.b_coeffs);
    const auto sy = abs_sum(y.a_coeffs, y.b_coeffs);
    if (sx != sy) {
        return sx < sy;
    }
    if (x.a_coeffs.size() != y.a_coeffs.size()) {
        return x.a_coeffs.size() < y.a_coeffs.size();
    }
    // positive leading coefficients first
    const bool xa = x.a_coeffs.back() < 0;
    const bool ya = y.a_coeffs.back() < 0;
    if (xa != ya) {
        return ya;
    }
    const bool xb = x.b_coeffs.back() < 0;
    const bool yb = y.b_coeffs.back() < 0;
    if (xb != yb) {
        return yb;
    }
    if (x.a_coeffs != y.a_coeffs) {
        return x.a_coeffs < y.a_coeffs;
    }
    if (x.b_coeffs.size() != y.b_coeffs.size()) {
        return x.b_coeffs.size() < y.b_coeffs.size();
    }
    return x.b_coeffs < y.b_coeffs;
}

std::string poly_string(const Coeffs &c) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        const std::int64_t v = c[i];
        if (v == 0) {
            continue;
        }
        const std::int64_t mag = v < 0 ? -v : v;
        if (first) {
            out << (v < 0 ? "-" : "");
        } else {
            out << (v < 0 ? "-" : "+");
        }
        if (i == 0 || mag != 1) {
            out << mag;
        }
        if (i >= 1) {
            out << "k";
        }
        if (i >= 2) {
            out << "^" << i;
        }
        first = false;
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

std::pair<std::int64_t, std::int64_t> value_box(int degree, std::int64_t lo, std::int64_t hi, std::int64_t k) {
    std::int64_t mn = 0;
    std::int64_t mx = 0;
    std::int64_t kp = 1;
    for (int i = 0; i <= degree; ++i) {
        mn += std::min(lo * kp, hi * kp);
        mx += std::max(lo * kp, hi * kp);
        kp *= k;
    }
    return {mn, mx};
}

using Point = std::pair<std::int64_t, std::int64_t>;

std::vector<Point> zeros_in_box(const ScaledG &g, std::pair<std::int64_t, std::int64_t> box) {
    const auto rows = static_cast<int>(box.second - box.first + 1);
    std::vector<std::vector<Point>> found(static_cast<std::size_t>(rows));
    parallel_for(0, rows, [&](int i) {
        const std::int64_t m_a = box.first + i;
        for (std::int64_t m_b = box.first; m_b <= box.second; ++m_b) {
            if (g.is_zero(m_a, m_b)) {
                found[i].emplace_back(m_a, m_b);
            }
        }
    });
    std::vector<Point> out;
    for (auto &row : found) {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

}  // namespace

std::int64_t ParametricSolution::m_a(std::int64_t k) const { return evaluate(a_coeffs, k); }

std::int64_t ParametricSolution::m_b(std::int64_t k) const { return evaluate(b_coeffs, k); }

bool ParametricSolution::physical_at(std::int64_t k) const { return m_a(k) >= 0 && m_b(k) >= 0; }

std::vector<std::int64_t> ParametricSolution::valid_k(std::int64_t k_lo, std::int64_t k_hi) const {
    std::vector<std::int64_t> out;
    for (auto k = k_lo; k <= k_hi; ++k) {
        if (physical_at(k)) {
            out.push_back(k);
        }
    }
    return out;
}

std::string ParametricSolution::str() const {
    return "(" + poly_string(a_coeffs) + ", " + poly_string(b_coeffs) + ")";
}

ParametricVerdict verify_parametric(const ParametricSolution &solution) {
    const Coeffs a = trimmed(solution.a_coeffs);
    const Coeffs b = trimmed(solution.b_coeffs);
    if (a.size() > 4 || b.size() > 4) {
        throw std::domain_error("verify_parametric: coordinates must have degree at most 3");
    }
    const int n = solution.n;
    const BigRational &t = solution.transmittance;
    const BigRational r = BigRational(1) - t;

    ParametricVerdict verdict;
    // Symbolic expansion in k.
    std::vector<BigRational> poly;
    for (int q = 0; q <= n; ++q) {
        const IntPoly term = multiply(falling_poly(a, n - q), falling_poly(b, q));
        BigRational scale = BigRational(binomial(n, q)) * t.pow(n - q) * r.pow(q);
        if (q % 2 == 1) {
            scale = -scale;
        }
        if (poly.size() < term.size()) {
            poly.resize(term.size());
        }
        for (std::size_t i = 0; i < term.size(); ++i) {
            poly[i] += scale * BigRational(term[i]);
        }
    }
    bool expansion_zero = true;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i].is_zero() && expansion_zero) {
            verdict.first_nonzero = std::pair(static_cast<int>(i), poly[i]);
            expansion_zero = false;
        }
    }
    verdict.coefficients = std::move(poly);

    // Point evaluation at k = 0..3n: enough points for a degree-3n polynomial.
    const ScaledG g(n, t);
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), t.denominator().get_mpz_t(), static_cast<unsigned long>(n));
    bool points_zero = true;
    for (int k = 0; k <= 3 * n; ++k) {
        BigRational v(g(evaluate(a, k), evaluate(b, k)), den);
        points_zero = points_zero && v.is_zero();
        verdict.point_values.push_back(std::move(v));
    }
    verdict.valid = expansion_zero && points_zero;
    verdict.certificates_agree = expansion_zero == points_zero;
    return verdict;
}

ParametricSolution canonicalize(const ParametricSolution &solution) {
    ParametricSolution best = solution;
    best.a_coeffs = trimmed(best.a_coeffs);
    best.b_coeffs = trimmed(best.b_coeffs);
    // Any representative with |c| > 2 S has a constant term above S in absolute
    // value, so it cannot beat the starting point.
    const std::int64_t bound = 2 * abs_sum(best.a_coeffs, best.b_coeffs) + 1;
    const Coeffs a = best.a_coeffs;
    const Coeffs b = best.b_coeffs;
    const Coeffs ra = reflected(a);
    const Coeffs rb = reflected(b);
    for (std::int64_t c = -bound; c <= bound; ++c) {
        for (int mirror = 0; mirror < 2; ++mirror) {
            ParametricSolution cand = solution;
            cand.a_coeffs = trimmed(shifted(mirror ? ra : a, c));
            cand.b_coeffs = trimmed(shifted(mirror ? rb : b, c));
            if (key_less(cand, best)) {
                best = std::move(cand);
            }
        }
    }
    return best;
}

std::vector<ParametricSolution> search_parametric(int n, const BigRational &transmittance, int degree,
                                                  std::int64_t lo, std::int64_t hi) {
    if (degree != 2 && degree != 3) {
        throw std::domain_error("search_parametric: degree must be 2 or 3");
    }
    if (lo > hi) {
        throw std::domain_error("search_parametric: empty coefficient range");
    }
    const ScaledG g(n, transmittance);
    // A tuple solves g identically only if its values at k = 0, 1, -1 are
    // integer zeros of g; enumerate those zeros and rebuild the tuples.
    const auto z0 = zeros_in_box(g, value_box(degree, lo, hi, 0));
    const auto z1 = zeros_in_box(g, value_box(degree, lo, hi, 1));
    const auto zm = zeros_in_box(g, value_box(degree, lo, hi, -1));
    std::array<std::vector<Point>, 4> zm_by_parity;
    auto parity = [](const Point &p) { return static_cast<int>((p.first & 1) * 2 + (p.second & 1)); };
    for (const auto &p : zm) {
        zm_by_parity[parity(p)].push_back(p);
    }
    auto in_range = [lo, hi](std::int64_t v) { return v >= lo && v <= hi; };

    // Points a tuple must vanish on beyond the ones used to build it; a
    // polynomial of degree <= degree*n in k with that many zeros is identically 0.
    std::vector<std::int64_t> extra;
    for (std::int64_t k = 2; static_cast<int>(extra.size()) + degree + 1 < degree * n + 1; ++k) {
        if (!(degree == 3 && k == 2)) {
            extra.push_back(k);
        }
        if (static_cast<int>(extra.size()) + degree + 1 < degree * n + 1) {
            extra.push_back(-k);
        }
    }
    auto passes_extra = [&](const Coeffs &a, const Coeffs &b) {
        for (auto k : extra) {
            if (!g.is_zero(evaluate(a, k), evaluate(b, k))) {
                return false;
            }
        }
        return true;
    };

    std::vector<std::vector<ParametricSolution>> found(z0.size());
    parallel_for(0, static_cast<int>(z0.size()), [&](int i) {
        const Point p0 = z0[i];
        auto &local = found[i];
        auto accept = [&](const Coeffs &a, const Coeffs &b) {
            bool constant = true;
            for (std::size_t j = 1; j < a.size(); ++j) {
                constant = constant && a[j] == 0 && b[j] == 0;
            }
            if (constant || !passes_extra(a, b)) {
                return;
            }
            ParametricSolution sol{a, b, n, transmittance};
            if (verify_parametric(sol).valid) {
                local.push_back(canonicalize(sol));
            }
        };
        for (const auto &p1 : z1) {
            for (const auto &pm : zm_by_parity[parity(p1)]) {
                const std::int64_t ha = (p1.first - pm.first) / 2;  // a1 + a3
                const std::int64_t hb = (p1.second - pm.second) / 2;
                const std::int64_t a2 = (p1.first + pm.first) / 2 - p0.first;
                const std::int64_t b2 = (p1.second + pm.second) / 2 - p0.second;
                if (!in_range(a2) || !in_range(b2)) {
                    continue;
                }
                if (degree == 2) {
                    if (in_range(ha) && in_range(hb)) {
                        accept({p0.first, ha, a2}, {p0.second, hb, b2});
                    }
                    continue;
                }
                for (std::int64_t a3 = lo; a3 <= hi; ++a3) {
                    const std::int64_t a1 = ha - a3;
                    if (!in_range(a1)) {
                        continue;
                    }
                    const Coeffs a{p0.first, a1, a2, a3};
                    const std::int64_t a_at_2 = evaluate(a, 2);
                    for (std::int64_t b3 = lo; b3 <= hi; ++b3) {
                        const std::int64_t b1 = hb - b3;
                        if (!in_range(b1)) {
                            continue;
                        }
                        const Coeffs b{p0.second, b1, b2, b3};
                        if (g.is_zero(a_at_2, evaluate(b, 2))) {
                            accept(a, b);
                        }
                    }
                }
            }
        }
    });

    std::vector<ParametricSolution> out;
    for (auto &list : found) {
        out.insert(out.end(), list.begin(), list.end());
    }
    std::sort(out.begin(), out.end(), key_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace homlab
