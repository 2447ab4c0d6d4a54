#pragma once

#include <cstdint>
#include <vector>

namespace randpoly::analysis {

// gamma_0 = 1/2, gamma_{k+1} = 1 / (2 pi (k+1) gamma_k); returns gamma_0..gamma_K.
std::vector<double> gamma_seq(int K);

// F_n = (2/n) gamma_{(n-1)^2} gamma_{n-1}^{-(n-1)}, the limit of expected
// facets per vertex. F_2 = 1, F_3 = 2, F_4 = 24 pi^2 / 35, ...
double facet_constant(int n);

// Probability that a fixed hyperplane at distance h from the origin leaves
// all m-n remaining sphere points on the origin side:
// (1 - cap_surface(n, 1-h)/s_n)^(m-n).
double facet_survival_probability(int n, std::int64_t m, double h);

// Explicit expectation bound m * C(m-1, n-1) * (16 * 4^{(n-1)/2} (n+2)
// log(m) / m)^{n-1} + 1 dominating the mean facet count.
double facet_upper_bound(int n, std::int64_t m);

// Borgwardt's average pivot bound
// m^{1/(n-1)} (n+1)^4 (2 pi / 5) (1 + e pi / 2).
double borgwardt_bound(int n, std::int64_t m);

}  // namespace randpoly::analysis
