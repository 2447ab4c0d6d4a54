#include "randpoly/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "randpoly/error.hpp"

namespace randpoly::sampler {

Eigen::VectorXd sample_sphere_point(int n, Rng& rng) {
    if (n < 2) fail("validation", "sphere points need dimension n >= 2");
    Eigen::VectorXd x(n);
    while (true) {
        for (int i = 0; i < n; ++i) x[i] = rng.next_gaussian();
        const double norm = x.norm();
        if (norm >= 1e-100) return x / norm;
        // Essentially impossible; resample rather than divide by ~0.
    }
}

PointCloud sample_polytope(int n, std::int64_t m, Seed seed) {
    if (n < 2) fail("validation", "sample_polytope needs n >= 2");
    if (m < 1) fail("validation", "sample_polytope needs m >= 1");

    Rng rng(seed);
    PointCloud cloud;
    cloud.n = n;
    cloud.seed = seed;
    cloud.points.resize(m, n);
    for (std::int64_t i = 0; i < m; ++i) {
        cloud.points.row(i) = sample_sphere_point(n, rng).transpose();
    }

    // Exact duplicates break the general-position assumption downstream;
    // a lexicographic sort makes the check O(m log m).
    std::vector<std::int64_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
        for (int j = 0; j < n; ++j) {
            if (cloud.points(a, j) != cloud.points(b, j)) {
                return cloud.points(a, j) < cloud.points(b, j);
            }
        }
        return false;
    });
    for (std::int64_t i = 0; i + 1 < m; ++i) {
        if (cloud.points.row(order[i]) == cloud.points.row(order[i + 1])) {
            fail("validation", "sampled cloud contains duplicate points");
        }
    }
    return cloud;
}

}  // namespace randpoly::sampler
