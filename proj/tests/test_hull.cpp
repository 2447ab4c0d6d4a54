#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "randpoly/error.hpp"
#include "randpoly/hull.hpp"
#include "randpoly/sampler.hpp"

using namespace randpoly;

namespace {

constexpr double kPi = std::numbers::pi;

sampler::PointCloud make_cloud(int n, std::initializer_list<std::initializer_list<double>> rows) {
    sampler::PointCloud cloud;
    cloud.n = n;
    cloud.points.resize(static_cast<int>(rows.size()), n);
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (double x : row) cloud.points(r, c++) = x;
        ++r;
    }
    return cloud;
}

sampler::PointCloud regular_polygon(int m) {
    sampler::PointCloud cloud;
    cloud.n = 2;
    cloud.points.resize(m, 2);
    for (int k = 0; k < m; ++k) {
        cloud.points(k, 0) = std::cos(2.0 * kPi * k / m);
        cloud.points(k, 1) = std::sin(2.0 * kPi * k / m);
    }
    return cloud;
}

sampler::PointCloud octahedron() {
    return make_cloud(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

std::set<std::vector<int>> facet_sets(const hull::Polytope& p) {
    std::set<std::vector<int>> out;
    for (const auto& f : p.facets) out.insert(f.vertices);
    return out;
}

void check_double_description(const hull::Polytope& p) {
    const auto& cloud = p.cloud;
    const bool origin_inside = hull::contains_origin(p);
    for (const auto& f : p.facets) {
        if (origin_inside) CHECK(f.offset >= -1e-9);  // else offsets may be negative
        CHECK(f.offset <= 1.0 + 1e-9);
        CHECK(std::abs(f.normal.norm() - 1.0) <= 1e-12);
        for (int id : f.vertices) {
            const Eigen::VectorXd x = (id == hull::kOriginId)
                                          ? Eigen::VectorXd::Zero(cloud.n).eval()
                                          : Eigen::VectorXd(cloud.points.row(id).transpose());
            CHECK(std::abs(f.normal.dot(x) - f.offset) <= 1e-9);
        }
        for (std::int64_t k = 0; k < cloud.m(); ++k) {
            CHECK(f.normal.dot(cloud.points.row(k)) - f.offset <= 1e-9);
        }
    }
    for (const auto& [ridge, cofacets] : p.ridges) {
        CHECK(cofacets[0] >= 0);
        CHECK(cofacets[1] >= 0);  // closed pseudomanifold: exactly two facets
    }
}

}  // namespace

TEST_CASE("planar hulls keep every circle point as an edge endpoint") {
    for (std::int64_t m : {5, 16, 40}) {
        const auto cloud = sampler::sample_polytope(2, m, {1u, static_cast<std::uint64_t>(m)});
        const auto [poly, stats] = hull::beneath_beyond(cloud, false);
        CHECK(static_cast<std::int64_t>(poly.facets.size()) == m);
        for (const auto& [id, deg] : hull::vertex_degrees(poly)) CHECK(deg == 2);
        check_double_description(poly);
        CHECK(stats.sidedness_tests > 0);
        CHECK(stats.facets_created - stats.facets_deleted ==
              static_cast<std::int64_t>(poly.facets.size()));
        CHECK(stats.facet_counts.size() == static_cast<std::size_t>(m - 2));
    }
}

TEST_CASE("spatial hulls obey Euler's relation") {
    for (std::int64_t m : {6, 25, 80}) {
        const auto cloud = sampler::sample_polytope(3, m, {9u, static_cast<std::uint64_t>(m)});
        const auto [poly, stats] = hull::beneath_beyond(cloud, false);
        const auto f2 = static_cast<std::int64_t>(poly.facets.size());
        CHECK(f2 == 2 * m - 4);
        CHECK(static_cast<std::int64_t>(poly.ridges.size()) == 3 * f2 / 2);  // edges
        check_double_description(poly);
    }
}

TEST_CASE("brute force on tiny fixtures") {
    const auto triangle = hull::brute_force_facets(
        make_cloud(2, {{1, 0}, {-0.5, 0.8}, {-0.3, -0.9}}), false);
    CHECK(triangle.facets.size() == 3);

    const auto tetra = hull::brute_force_facets(
        make_cloud(3, {{1, 0, 0}, {-0.7, 0.7, 0.14}, {-0.4, -0.8, 0.45}, {0.1, 0.2, -0.97}}),
        false);
    CHECK(tetra.facets.size() == 4);
    for (const auto& [id, deg] : hull::vertex_degrees(tetra)) CHECK(deg == 3);
}

TEST_CASE("incremental hull matches the brute-force oracle") {
    for (int n : {2, 3, 4}) {
        for (std::int64_t m : {static_cast<std::int64_t>(n + 2), static_cast<std::int64_t>(8),
                               static_cast<std::int64_t>(12)}) {
            for (std::uint64_t seed = 0; seed < 15; ++seed) {
                const auto cloud = sampler::sample_polytope(n, m, {seed, 3u});
                const auto [poly, stats] = hull::beneath_beyond(cloud, false);
                const auto oracle = hull::brute_force_facets(cloud, false);
                CHECK(facet_sets(poly) == facet_sets(oracle));
            }
        }
    }
}

TEST_CASE("hull over the origin cone degrades to the plain hull once 0 is interior") {
    const auto cloud = sampler::sample_polytope(3, 30, {5u, 2u});
    const auto [with_origin, s1] = hull::beneath_beyond(cloud, true);
    const auto [without, s2] = hull::beneath_beyond(cloud, false);
    const auto oracle = hull::brute_force_facets(cloud, true);
    CHECK(facet_sets(with_origin) == facet_sets(without));
    CHECK(facet_sets(with_origin) == facet_sets(oracle));
    CHECK(hull::contains_origin(with_origin));
}

TEST_CASE("hemisphere cloud keeps the origin on the boundary") {
    auto cloud = sampler::sample_polytope(3, 20, {31u, 0u});
    cloud.points.col(0) = cloud.points.col(0).cwiseAbs();  // push into x > 0
    const auto [poly, stats] = hull::beneath_beyond(cloud, true);
    bool origin_vertex = false;
    for (const auto& f : poly.facets) {
        if (f.vertices.front() == hull::kOriginId) {
            origin_vertex = true;
            CHECK(std::abs(f.offset) <= 1e-9);
        }
    }
    CHECK(origin_vertex);
    CHECK_FALSE(hull::contains_origin(poly));

    // including the origin-vertex facets, the hull matches the oracle
    const auto oracle = hull::brute_force_facets(cloud, true);
    CHECK(facet_sets(poly) == facet_sets(oracle));
}

TEST_CASE("hausdorff distance on symmetric fixtures") {
    const auto square = hull::brute_force_facets(
        make_cloud(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), false);
    CHECK(hull::hausdorff_to_sphere(square) == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0));

    const auto octa = hull::brute_force_facets(octahedron(), false);
    CHECK(octa.facets.size() == 8);
    CHECK(hull::contains_origin(octa));
    CHECK(hull::hausdorff_to_sphere(octa) == doctest::Approx(1.0 - 1.0 / std::sqrt(3.0)));

    for (int m : {7, 12}) {
        const auto [gon, stats] = hull::beneath_beyond(regular_polygon(m), false);
        CHECK(hull::hausdorff_to_sphere(gon) == doctest::Approx(1.0 - std::cos(kPi / m)));
    }
}

TEST_CASE("origin containment") {
    const auto arc = hull::brute_force_facets(
        make_cloud(2, {{1, 0}, {std::sqrt(0.5), std::sqrt(0.5)}, {0.8, 0.6}}), false);
    CHECK_FALSE(hull::contains_origin(arc));
    CHECK_THROWS_WITH_AS(hull::hausdorff_to_sphere(arc), doctest::Contains("origin-not-interior"),
                         Error);

    int inside = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto cloud = sampler::sample_polytope(3, 50, {seed, 11u});
        const auto [poly, stats] = hull::beneath_beyond(cloud, false);
        if (hull::contains_origin(poly)) ++inside;
    }
    CHECK(inside >= 95);
}

TEST_CASE("vertex degrees agree with a ridge recount") {
    const auto cloud = sampler::sample_polytope(4, 12, {3u, 3u});
    const auto [poly, stats] = hull::beneath_beyond(cloud, false);
    std::map<int, std::set<int>> via_ridges;
    for (const auto& [ridge, cofacets] : poly.ridges) {
        for (int id : ridge) {
            via_ridges[id].insert(cofacets[0]);
            via_ridges[id].insert(cofacets[1]);
        }
    }
    for (const auto& [id, deg] : hull::vertex_degrees(poly)) {
        CHECK(static_cast<int>(via_ridges.at(id).size()) == deg);
    }
}

TEST_CASE("midpoints of hull edges obey the Pythagorean shrinkage") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto cloud = sampler::sample_polytope(3, 25, {seed, 17u});
        const auto [poly, stats] = hull::beneath_beyond(cloud, false);
        for (const auto& [edge, cofacets] : poly.ridges) {
            const Eigen::VectorXd a = cloud.points.row(edge[0]);
            const Eigen::VectorXd b = cloud.points.row(edge[1]);
            const double eps = (a - b).norm();
            const double mid = ((a + b) / 2.0).norm();
            CHECK(mid == doctest::Approx(std::sqrt(1.0 - eps * eps / 4.0)).epsilon(1e-12));
            CHECK(mid <= 1.0 - eps * eps / 8.0 + 1e-12);
        }
    }
}

TEST_CASE("cofacial vertices stay in a 4-delta cap of each other") {
    for (int n : {2, 3, 4}) {
        for (std::uint64_t seed = 0; seed < 34; ++seed) {
            const auto cloud = sampler::sample_polytope(n, 30, {seed, 23u});
            const auto [poly, stats] = hull::beneath_beyond(cloud, false);
            if (!hull::contains_origin(poly)) continue;
            const double delta = hull::hausdorff_to_sphere(poly);
            for (const auto& f : poly.facets) {
                for (std::size_t i = 0; i < f.vertices.size(); ++i) {
                    for (std::size_t j = i + 1; j < f.vertices.size(); ++j) {
                        const double dot = cloud.points.row(f.vertices[i])
                                               .dot(cloud.points.row(f.vertices[j]));
                        CHECK(dot >= 1.0 - 4.0 * delta - 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("degenerate inputs are rejected loudly") {
    // collinear starting simplex
    CHECK_THROWS_WITH_AS(
        hull::beneath_beyond(make_cloud(2, {{0, 0}, {1, 0}, {2, 0}, {1, 5}}), false),
        doctest::Contains("degenerate-input"), Error);
    // a later point exactly on an existing facet line
    CHECK_THROWS_WITH_AS(
        hull::beneath_beyond(make_cloud(2, {{1, 0}, {0, 1}, {-0.6, -0.8}, {0.5, 0.5}}), false),
        doctest::Contains("degenerate-input"), Error);
    CHECK_THROWS_WITH_AS(hull::beneath_beyond(sampler::sample_polytope(3, 3, {1u, 1u}), false),
                         doctest::Contains("validation"), Error);
    CHECK_THROWS_AS(hull::brute_force_facets(sampler::sample_polytope(3, 2, {1u, 1u}), false),
                    Error);
}

TEST_CASE("interior points are skipped, not fatal") {
    const auto cloud = make_cloud(2, {{1, 0}, {-0.6, 0.8}, {-0.6, -0.8}, {0.1, 0.05}});
    const auto [poly, stats] = hull::beneath_beyond(cloud, false);
    CHECK(poly.facets.size() == 3);
    CHECK(stats.points_skipped_inside == 1);
}
