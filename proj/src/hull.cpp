#include "randpoly/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "randpoly/error.hpp"

namespace randpoly::hull {

namespace {

constexpr double kTol = 1e-9;
// Tie band for sidedness tests. Random clouds land within 1e-9 of a facet
// hyperplane with probability growing like m^3 * tol in the plane, so the
// visibility tie tolerance must sit far below the certification slack or
// legitimate inputs at m ~ 10^3 get rejected as degenerate.
constexpr double kTieTol = 1e-13;
constexpr double kDegenerateVolume = 1e-12;

Eigen::VectorXd point_of(const sampler::PointCloud& cloud, int id) {
    if (id == kOriginId) return Eigen::VectorXd::Zero(cloud.n);
    return cloud.points.row(id).transpose();
}

struct Hyperplane {
    Eigen::VectorXd normal;
    double offset = 0.0;
};

// Hyperplane spanned by n points (rows of `pts`), unit normal with
// unspecified sign. Throws when the simplex does not span.
Hyperplane hyperplane_through(const Eigen::MatrixXd& pts) {
    const int n = static_cast<int>(pts.cols());
    Eigen::MatrixXd edges(n, n - 1);
    for (int i = 1; i < n; ++i) {
        edges.col(i - 1) = (pts.row(i) - pts.row(0)).transpose();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(edges);
    const Eigen::MatrixXd r = qr.matrixQR();
    double volume = 1.0;
    for (int i = 0; i < n - 1; ++i) volume *= std::abs(r(i, i));
    if (volume <= kDegenerateVolume) {
        fail("degenerate-input", "facet simplex has near-zero spanning determinant");
    }
    Eigen::MatrixXd q = qr.householderQ();
    Hyperplane plane;
    plane.normal = q.col(n - 1);
    plane.offset = plane.normal.dot(pts.row(0));
    return plane;
}

// Orients the plane outward: the interior reference point ends up strictly
// on the <= side.
void orient_outward(Hyperplane& plane, const Eigen::VectorXd& interior) {
    const double side = plane.normal.dot(interior) - plane.offset;
    if (std::abs(side) <= kTol) {
        fail("degenerate-input", "interior reference point lies on a facet hyperplane");
    }
    if (side > 0.0) {
        plane.normal = -plane.normal;
        plane.offset = -plane.offset;
    }
}

struct VectorIntHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

Eigen::MatrixXd gather_points(const sampler::PointCloud& cloud, const std::vector<int>& ids) {
    Eigen::MatrixXd pts(static_cast<int>(ids.size()), cloud.n);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        pts.row(static_cast<int>(i)) = point_of(cloud, ids[i]).transpose();
    }
    return pts;
}

void add_ridges(Polytope& polytope, int facet_index) {
    const auto& vs = polytope.facets[facet_index].vertices;
    std::vector<int> ridge(vs.size() - 1);
    for (std::size_t omit = 0; omit < vs.size(); ++omit) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i != omit) ridge[k++] = vs[i];
        }
        auto [it, inserted] = polytope.ridges.try_emplace(ridge, std::array<int, 2>{-1, -1});
        if (inserted) {
            it->second[0] = facet_index;
        } else if (it->second[1] == -1) {
            it->second[1] = facet_index;
        } else {
            fail("degenerate-input", "ridge shared by more than two facets");
        }
    }
}

}  // namespace

std::pair<Polytope, HullStats> beneath_beyond(const sampler::PointCloud& cloud,
                                              bool includes_origin) {
    const int n = cloud.n;
    const std::int64_t m = cloud.m();
    const std::int64_t needed = includes_origin ? n : n + 1;
    if (m < needed) {
        fail("validation", "beneath_beyond needs at least " + std::to_string(needed) +
                               " points in dimension " + std::to_string(n));
    }

    // Starting simplex: origin plus first n points, or first n+1 points.
    std::vector<int> simplex;
    if (includes_origin) simplex.push_back(kOriginId);
    for (int i = 0; simplex.size() < static_cast<std::size_t>(n) + 1; ++i) simplex.push_back(i);

    Eigen::VectorXd interior = Eigen::VectorXd::Zero(n);
    for (int id : simplex) interior += point_of(cloud, id);
    interior /= static_cast<double>(simplex.size());

    struct LiveFacet {
        std::vector<int> vertices;
        Eigen::VectorXd normal;
        double offset;
    };
    std::vector<LiveFacet> facets;
    HullStats stats;

    auto make_facet = [&](std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        Hyperplane plane = hyperplane_through(gather_points(cloud, vs));
        orient_outward(plane, interior);
        facets.push_back({std::move(vs), std::move(plane.normal), plane.offset});
        ++stats.facets_created;
    };

    for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
        std::vector<int> vs;
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            if (i != omit) vs.push_back(simplex[i]);
        }
        make_facet(std::move(vs));
    }
    stats.facet_counts.push_back(static_cast<std::int64_t>(facets.size()));

    std::vector<int> visible;
    std::unordered_map<std::vector<int>, int, VectorIntHash> ridge_use;
    for (std::int64_t next = needed; next < m; ++next) {
        const Eigen::VectorXd p = point_of(cloud, static_cast<int>(next));

        visible.clear();
        for (std::size_t f = 0; f < facets.size(); ++f) {
            ++stats.sidedness_tests;
            const double side = facets[f].normal.dot(p) - facets[f].offset;
            const double tol = kTieTol * std::max(1.0, std::abs(facets[f].offset));
            if (std::abs(side) <= tol) {
                fail("degenerate-input", "point " + std::to_string(next) +
                                             " lies on a facet hyperplane within tolerance");
            }
            if (side > tol) visible.push_back(static_cast<int>(f));
        }

        if (visible.empty()) {
            // Inside the current hull; impossible for sphere samples but
            // legal for user-supplied clouds.
            ++stats.points_skipped_inside;
            stats.facet_counts.push_back(static_cast<std::int64_t>(facets.size()));
            continue;
        }

        // Horizon ridges: ridges of visible facets with exactly one visible
        // cofacet (the hull is a closed pseudomanifold throughout).
        ridge_use.clear();
        std::vector<int> ridge(n - 1);
        for (int f : visible) {
            const auto& vs = facets[f].vertices;
            for (int omit = 0; omit < n; ++omit) {
                int k = 0;
                for (int i = 0; i < n; ++i) {
                    if (i != omit) ridge[k++] = vs[i];
                }
                ++ridge_use[ridge];
            }
        }

        for (const auto& [horizon, count] : ridge_use) {
            if (count != 1) continue;
            std::vector<int> vs = horizon;
            vs.push_back(static_cast<int>(next));
            make_facet(std::move(vs));
        }

        std::sort(visible.begin(), visible.end(), std::greater<>());
        for (int f : visible) {
            facets[f] = std::move(facets.back());
            facets.pop_back();
            ++stats.facets_deleted;
        }
        stats.facet_counts.push_back(static_cast<std::int64_t>(facets.size()));
    }

    Polytope polytope;
    polytope.cloud = cloud;
    polytope.includes_origin = includes_origin;
    polytope.facets.reserve(facets.size());
    for (auto& f : facets) {
        polytope.facets.push_back({std::move(f.vertices), std::move(f.normal), f.offset});
    }
    std::sort(polytope.facets.begin(), polytope.facets.end(),
              [](const FacetRecord& a, const FacetRecord& b) { return a.vertices < b.vertices; });
    for (std::size_t f = 0; f < polytope.facets.size(); ++f) {
        add_ridges(polytope, static_cast<int>(f));
    }
    return {std::move(polytope), std::move(stats)};
}

Polytope brute_force_facets(const sampler::PointCloud& cloud, bool includes_origin) {
    const int n = cloud.n;
    const std::int64_t m = cloud.m();
    if (m < n) fail("validation", "brute_force_facets needs m >= n");

    Polytope polytope;
    polytope.cloud = cloud;
    polytope.includes_origin = includes_origin;

    std::vector<int> subset(n);
    for (int i = 0; i < n; ++i) subset[i] = i;

    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && subset[i] == m - n + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
        return true;
    };

    std::vector<char> in_subset(m, 0);
    do {
        std::fill(in_subset.begin(), in_subset.end(), 0);
        for (int id : subset) in_subset[id] = 1;

        Hyperplane plane = hyperplane_through(gather_points(cloud, subset));
        int above = 0;
        int below = 0;
        bool degenerate = false;
        auto classify = [&](double side) {
            if (std::abs(side) <= kTieTol) {
                degenerate = true;
            } else if (side > 0.0) {
                ++above;
            } else {
                ++below;
            }
        };
        for (std::int64_t other = 0; other < m; ++other) {
            if (in_subset[other]) continue;
            classify(plane.normal.dot(cloud.points.row(other)) - plane.offset);
        }
        if (includes_origin) classify(-plane.offset);
        // Points strictly on both sides reject the candidate no matter how
        // any on-plane ties would resolve (octahedron-style symmetric inputs
        // hit this constantly); a tie only matters on a would-be facet.
        if (above > 0 && below > 0) continue;
        if (degenerate) {
            fail("degenerate-input", "a point lies on a candidate facet hyperplane");
        }

        if (above > 0 || (above == 0 && below == 0 && plane.offset < 0.0)) {
            plane.normal = -plane.normal;
            plane.offset = -plane.offset;
        }
        polytope.facets.push_back({subset, std::move(plane.normal), plane.offset});
    } while (advance());

    if (includes_origin && n >= 2) {
        // Candidate facets through the origin: the origin plus n-1 points.
        std::vector<int> sub(n - 1);
        for (int i = 0; i < n - 1; ++i) sub[i] = i;
        auto advance_sub = [&]() {
            int i = n - 2;
            while (i >= 0 && sub[i] == m - (n - 1) + i) --i;
            if (i < 0) return false;
            ++sub[i];
            for (int j = i + 1; j < n - 1; ++j) sub[j] = sub[j - 1] + 1;
            return true;
        };
        do {
            std::vector<int> ids;
            ids.reserve(n);
            ids.push_back(kOriginId);
            ids.insert(ids.end(), sub.begin(), sub.end());
            std::fill(in_subset.begin(), in_subset.end(), 0);
            for (int id : sub) in_subset[id] = 1;

            Hyperplane plane = hyperplane_through(gather_points(cloud, ids));
            int above = 0;
            int below = 0;
            bool degenerate = false;
            for (std::int64_t other = 0; other < m; ++other) {
                if (in_subset[other]) continue;
                const double side = plane.normal.dot(cloud.points.row(other)) - plane.offset;
                if (std::abs(side) <= kTieTol) {
                    degenerate = true;
                } else if (side > 0.0) {
                    ++above;
                } else {
                    ++below;
                }
            }
            if (above > 0 && below > 0) continue;
            if (degenerate) {
                fail("degenerate-input", "a point lies on a candidate facet hyperplane");
            }
            if (above > 0) {
                plane.normal = -plane.normal;
                plane.offset = -plane.offset;
            }
            polytope.facets.push_back({ids, std::move(plane.normal), plane.offset});
        } while (advance_sub());
    }

    std::sort(polytope.facets.begin(), polytope.facets.end(),
              [](const FacetRecord& a, const FacetRecord& b) { return a.vertices < b.vertices; });
    for (std::size_t f = 0; f < polytope.facets.size(); ++f) {
        add_ridges(polytope, static_cast<int>(f));
    }
    return polytope;
}

double hausdorff_to_sphere(const Polytope& polytope) {
    if (polytope.facets.empty()) fail("validation", "polytope has no facets");
    double min_offset = std::numeric_limits<double>::infinity();
    for (const auto& facet : polytope.facets) min_offset = std::min(min_offset, facet.offset);
    if (min_offset <= 0.0) {
        fail("origin-not-interior", "a facet has nonpositive offset");
    }
    return 1.0 - min_offset;
}

std::vector<std::pair<int, int>> vertex_degrees(const Polytope& polytope) {
    std::map<int, int> degree;
    for (const auto& facet : polytope.facets) {
        for (int id : facet.vertices) ++degree[id];
    }
    return {degree.begin(), degree.end()};
}

bool contains_origin(const Polytope& polytope) {
    if (polytope.facets.empty()) return false;
    for (const auto& facet : polytope.facets) {
        // Strictly positive clearance: hulls built with the origin as a
        // vertex carry facets whose offset is a rounding-level positive.
        if (facet.offset <= kTol) return false;
    }
    return true;
}

}  // namespace randpoly::hull
