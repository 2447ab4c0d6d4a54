#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "randpoly/sampler.hpp"

namespace randpoly::hull {

// Vertex id -1 denotes the origin, present only when a hull over
// conv(0, a_1, ..., a_m) still has the origin on its boundary.
constexpr int kOriginId = -1;

struct FacetRecord {
    std::vector<int> vertices;  // n ids, sorted ascending
    Eigen::VectorXd normal;     // outward unit normal
    double offset = 0.0;        // signed distance <normal, x> = offset
};

struct HullStats {
    std::int64_t sidedness_tests = 0;
    std::int64_t facets_created = 0;
    std::int64_t facets_deleted = 0;
    std::int64_t points_skipped_inside = 0;
    std::vector<std::int64_t> facet_counts;  // facets alive after each insertion
};

struct Polytope {
    sampler::PointCloud cloud;
    bool includes_origin = false;
    std::vector<FacetRecord> facets;
    // Each (n-1)-subset of a facet's vertex set, mapped to the <=2 facets
    // containing it (index into facets; -1 when absent).
    std::map<std::vector<int>, std::array<int, 2>> ridges;
};

// Incremental double-description hull: points are inserted in cloud order,
// facets visible from the new point are deleted and horizon ridges coned to
// it. Counts every sidedness test.
std::pair<Polytope, HullStats> beneath_beyond(const sampler::PointCloud& cloud,
                                              bool includes_origin);

// O(m^{n+1}) oracle: every n-subset is tested directly against all other
// points (and the origin when included).
Polytope brute_force_facets(const sampler::PointCloud& cloud, bool includes_origin);

// 1 - min facet offset; requires the origin strictly inside.
double hausdorff_to_sphere(const Polytope& polytope);

// (vertex id, number of facets containing it) for every hull vertex.
std::vector<std::pair<int, int>> vertex_degrees(const Polytope& polytope);

// True iff every facet offset is strictly positive.
bool contains_origin(const Polytope& polytope);

}  // namespace randpoly::hull
