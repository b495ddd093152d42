#include "homlab/detector.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "homlab/parallel.h"

namespace homlab {

namespace {

void check_efficiency(double eta, const char *name) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::domain_error(std::string(name) + " must lie in [0, 1]");
    }
}

// Bernoulli thinning kernel: row M holds Bin(m | M, eta) for m = 0..M.
std::vector<double> thinning_kernel(int size, double eta) {
    const auto side = static_cast<std::size_t>(size);
    std::vector<double> k(side * side, 0.0);
    for (int big = 0; big < size; ++big) {
        for (int m = 0; m <= big; ++m) {
            k[big * side + m] = static_cast<double>(static_cast<long double>(binomial_double(big, m)) *
                                                    std::pow(static_cast<long double>(eta), m) *
                                                    std::pow(1.0L - eta, big - m));
        }
    }
    return k;
}

long double bernoulli_count(int n, int t, double eta) {
    return static_cast<long double>(binomial_double(n, t)) * std::pow(static_cast<long double>(eta), t) *
           std::pow(1.0L - eta, n - t);
}

}  // namespace

JointDistribution lossy_distribution(const JointDistribution &dist, const LossConfig &loss) {
    check_efficiency(loss.eta_a, "eta_a");
    check_efficiency(loss.eta_b, "eta_b");
    const int source_max = loss.source_max.value_or(dist.grid_max);
    if (source_max < dist.grid_max) {
        throw std::domain_error("source_max " + std::to_string(source_max) + " is below the grid size " +
                                std::to_string(dist.grid_max));
    }
    const int size = dist.size();
    const auto side = static_cast<std::size_t>(size);
    const auto ka = thinning_kernel(size, loss.eta_a);
    const auto kb = thinning_kernel(size, loss.eta_b);

    // Thin mode b along each row, then mode a down each column.
    std::vector<double> half(side * side, 0.0);
    parallel_for(0, size, [&](int row) {
        for (int mb = 0; mb < size; ++mb) {
            long double acc = 0.0L;
            for (int big = mb; big < size; ++big) {
                acc += static_cast<long double>(kb[big * side + mb]) * dist.grid[row * side + big];
            }
            half[row * side + mb] = static_cast<double>(acc);
        }
    });
    JointDistribution out = dist;
    out.warnings.clear();
    parallel_for(0, size, [&](int ma) {
        for (int mb = 0; mb < size; ++mb) {
            long double acc = 0.0L;
            for (int big = ma; big < size; ++big) {
                acc += static_cast<long double>(ka[big * side + ma]) * half[big * side + mb];
            }
            out.grid[ma * side + mb] = static_cast<double>(acc);
        }
    });
    long double sum = 0.0L;
    for (double v : out.grid) {
        sum += v;
    }
    out.total_mass = static_cast<double>(sum);
    out.tail_deficit = 1.0 - out.total_mass;
    out.warnings = dist.warnings;
    return out;
}

double SqueezedSource::tail_mass() const {
    return std::pow(std::tanh(r), 2.0 * (cutoff + 1));
}

SqueezedSource squeezed_source(double r, std::optional<int> cutoff, double eps) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::domain_error("squeezing parameter r must be non-negative");
    }
    SqueezedSource source{r, 0};
    if (cutoff) {
        if (*cutoff < 0) {
            throw std::domain_error("source cutoff must be non-negative");
        }
        source.cutoff = *cutoff;
        return source;
    }
    while (source.tail_mass() >= eps) {
        ++source.cutoff;
    }
    return source;
}

double tmss_prob(int n, const SqueezedSource &source) {
    if (n < 0) {
        throw std::domain_error("tmss_prob: photon number must be non-negative");
    }
    const long double t2 = std::pow(std::tanh(static_cast<long double>(source.r)), 2.0L);
    const long double c = std::cosh(static_cast<long double>(source.r));
    return static_cast<double>(std::pow(t2, n) / (c * c));
}

double spdc_detection_prob(int t, double eta, const SqueezedSource &source) {
    check_efficiency(eta, "eta");
    if (t < 0) {
        throw std::domain_error("spdc_detection_prob: count must be non-negative");
    }
    long double total = 0.0L;
    for (int n = t; n <= source.cutoff; ++n) {
        total += bernoulli_count(n, t, eta) * tmss_prob(n, source);
    }
    return static_cast<double>(total);
}

double herald_posterior(int n_prime, int t, double eta, const SqueezedSource &source) {
    check_efficiency(eta, "eta");
    if (t < 0 || n_prime < 0) {
        throw std::domain_error("herald_posterior: photon numbers must be non-negative");
    }
    if (t > source.cutoff) {
        throw std::domain_error("herald_posterior: count " + std::to_string(t) + " exceeds the source cutoff " +
                                std::to_string(source.cutoff));
    }
    if (eta == 0.0 && t > 0) {
        throw std::domain_error("herald_posterior: a count of t > 0 is impossible at eta = 0");
    }
    if (n_prime < t || n_prime > source.cutoff) {
        return 0.0;
    }
    const long double evidence = spdc_detection_prob(t, eta, source);
    if (evidence == 0.0L) {
        throw std::domain_error("herald_posterior: count has zero probability");
    }
    return static_cast<double>(bernoulli_count(n_prime, t, eta) * tmss_prob(n_prime, source) / evidence);
}

double squeezing_db(double r) {
    if (!(r >= 0.0)) {
        throw std::domain_error("squeezing_db: r must be non-negative");
    }
    return 10.0 * std::log10(std::exp(-2.0 * r));
}

}  // namespace homlab
