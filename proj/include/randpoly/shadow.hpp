#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "randpoly/hull.hpp"
#include "randpoly/sampler.hpp"

namespace randpoly::shadow {

struct LPInstance {
    sampler::PointCloud cloud;   // constraint vectors a_i
    Eigen::VectorXd objective;   // v, normalized internally
};

enum class LPStatus {
    Optimal,   // ray R+ v pierces a facet of Y = conv(0, a_1..a_m)
    NoFacet,   // ray exits through a face containing the origin (unbounded primal)
};

struct LPSolution {
    LPStatus status = LPStatus::NoFacet;
    std::vector<int> facet;            // n vertex ids when Optimal, sorted
    Eigen::VectorXd x_star;            // primal optimum when Optimal
    std::vector<std::int64_t> pivots_by_dim;  // entry d = pivots at stage k = d + 2
    std::int64_t total_pivots = 0;
};

// Dual shadow-vertex algorithm on Y = conv(0, a_1, ..., a_m): a 2D simplex
// walk on the projection to the first two coordinates, then one shadow
// polygon walk per added dimension k = 3..n.
LPSolution solve_shadow_vertex(const LPInstance& instance);

// Solves <a_i, x> = 1 for the n facet normals (rows of `normals`).
Eigen::VectorXd recover_primal(const Eigen::MatrixXd& normals);

struct SectionCount {
    Eigen::VectorXd u, v;  // orthonormalized plane basis
    std::int64_t edge_count = 0;
};

// Number of facets of P meeting the plane span(u, v); each such facet
// contributes one edge of the section polygon.
SectionCount section_edge_count(const hull::Polytope& polytope, const Eigen::VectorXd& u,
                                const Eigen::VectorXd& v);

struct SectionSegment {
    int facet_index = -1;
    Eigen::Vector2d p0, p1;  // endpoints in (u, v) plane coordinates
};

// The section edges themselves, for polygon-closure checks.
std::vector<SectionSegment> section_segments(const hull::Polytope& polytope,
                                             const Eigen::VectorXd& u, const Eigen::VectorXd& v);

}  // namespace randpoly::shadow
