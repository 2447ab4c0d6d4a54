#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "randpoly/rng.hpp"

namespace randpoly::sampler {

using rng::Rng;
using rng::Seed;

// One uniform draw from S^{n-1}: n i.i.d. standard normals, normalized.
Eigen::VectorXd sample_sphere_point(int n, Rng& rng);

// m i.i.d. uniform points on S^{n-1}, one row per point, drawn in a fixed
// order from the seed. Identical (n, m, seed) reproduces identical clouds.
struct PointCloud {
    int n = 0;
    Eigen::MatrixXd points;  // m x n, rows are unit vectors
    Seed seed;

    std::int64_t m() const { return points.rows(); }
};

PointCloud sample_polytope(int n, std::int64_t m, Seed seed);

}  // namespace randpoly::sampler
