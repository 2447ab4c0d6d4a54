#include "randpoly/analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "randpoly/error.hpp"
#include "randpoly/geometry.hpp"

namespace randpoly::analysis {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> gamma_seq(int K) {
    if (K < 0) fail("validation", "gamma_seq needs K >= 0");
    std::vector<double> gamma(K + 1);
    gamma[0] = 0.5;
    for (int k = 0; k < K; ++k) {
        gamma[k + 1] = 1.0 / (2.0 * kPi * (k + 1) * gamma[k]);
    }
    return gamma;
}

double facet_constant(int n) {
    if (n < 2) fail("validation", "facet_constant needs n >= 2");
    if (n > 50) {
        fail("overflow-guard", "facet_constant grows exponentially; n = " + std::to_string(n) +
                                   " exceeds the supported range");
    }
    const auto gamma = gamma_seq((n - 1) * (n - 1));
    return 2.0 / n * gamma[(n - 1) * (n - 1)] * std::pow(gamma[n - 1], -(n - 1));
}

double facet_survival_probability(int n, std::int64_t m, double h) {
    if (m <= n) fail("validation", "facet_survival_probability needs m > n");
    if (!(h >= 0.0 && h <= 1.0)) fail("validation", "h outside [0, 1]");
    const double base = 1.0 - geometry::cap_fraction(n, 1.0 - h);
    return std::pow(base, static_cast<double>(m - n));
}

double facet_upper_bound(int n, std::int64_t m) {
    if (n < 2) fail("validation", "facet_upper_bound needs n >= 2");
    if (m < 2 * n) fail("validation", "facet_upper_bound needs m >= 2n");
    const double md = static_cast<double>(m);
    double binom = 1.0;
    for (int k = 1; k <= n - 1; ++k) {
        binom *= static_cast<double>(m - k) / k;
    }
    // 4^{(n-1)/2} = 2^{n-1}
    const double cap_ratio = 16.0 * std::pow(2.0, n - 1) * (n + 2) * std::log(md) / md;
    return md * binom * std::pow(cap_ratio, n - 1) + 1.0;
}

double borgwardt_bound(int n, std::int64_t m) {
    if (n < 2) fail("validation", "borgwardt_bound needs n >= 2");
    if (m < 1) fail("validation", "borgwardt_bound needs m >= 1");
    return std::pow(static_cast<double>(m), 1.0 / (n - 1)) * std::pow(n + 1.0, 4) *
           (2.0 * kPi / 5.0) * (1.0 + std::numbers::e * kPi / 2.0);
}

}  // namespace randpoly::analysis
