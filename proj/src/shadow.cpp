#include "randpoly/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "randpoly/error.hpp"

namespace randpoly::shadow {

namespace {

constexpr double kTol = 1e-9;
constexpr int kNoVertex = std::numeric_limits<int>::min();

Eigen::VectorXd proj_point(const sampler::PointCloud& cloud, int id, int k) {
    if (id == hull::kOriginId) return Eigen::VectorXd::Zero(k);
    return cloud.points.row(id).head(k).transpose();
}

struct FacetGeom {
    Eigen::MatrixXd vertices;  // k rows of k coordinates
    Eigen::VectorXd normal;    // outward
    double offset = 0.0;
};

FacetGeom facet_geom(const sampler::PointCloud& cloud, const std::vector<int>& ids, int k,
                     const Eigen::VectorXd& interior) {
    const int count = static_cast<int>(ids.size());
    FacetGeom geom;
    geom.vertices.resize(count, k);
    for (int i = 0; i < count; ++i) geom.vertices.row(i) = proj_point(cloud, ids[i], k).transpose();

    Eigen::MatrixXd edges(k, count - 1);
    for (int i = 1; i < count; ++i) {
        edges.col(i - 1) = (geom.vertices.row(i) - geom.vertices.row(0)).transpose();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(edges);
    const Eigen::MatrixXd r = qr.matrixQR();
    double volume = 1.0;
    for (int i = 0; i < count - 1; ++i) volume *= std::abs(r(i, i));
    if (volume <= 1e-12) {
        fail("degenerate-geometry", "projected facet simplex does not span");
    }
    Eigen::MatrixXd q = qr.householderQ();
    geom.normal = q.col(k - 1);
    geom.offset = geom.normal.dot(geom.vertices.row(0));
    const double side = geom.normal.dot(interior) - geom.offset;
    if (std::abs(side) <= kTol) {
        fail("degenerate-geometry", "interior reference lies on a projected facet");
    }
    if (side > 0.0) {
        geom.normal = -geom.normal;
        geom.offset = -geom.offset;
    }
    return geom;
}

struct Section {
    bool parallel = false;  // plane parallel to the facet hyperplane
    bool empty = true;
    Eigen::Vector2d p0 = Eigen::Vector2d::Zero();
    Eigen::Vector2d p1 = Eigen::Vector2d::Zero();
    int bind0 = kNoVertex;  // vertex id whose barycentric weight vanishes at p0
    int bind1 = kNoVertex;
};

// Intersection of the facet simplex with the plane spanned by the
// orthonormal pair (P1, P2), in plane coordinates. The plane passes through
// the origin; the hyperplane restricts it to a line, barycentric weights
// restrict the line to a segment.
Section facet_section(const std::vector<int>& ids, const FacetGeom& geom,
                      const Eigen::VectorXd& plane1, const Eigen::VectorXd& plane2) {
    Section section;
    const double bu = geom.normal.dot(plane1);
    const double bv = geom.normal.dot(plane2);
    const double norm2 = bu * bu + bv * bv;
    if (std::sqrt(norm2) <= 1e-12) {
        section.parallel = true;
        return section;
    }
    const Eigen::Vector2d anchor(geom.offset * bu / norm2, geom.offset * bv / norm2);
    const Eigen::Vector2d direction(-bv / std::sqrt(norm2), bu / std::sqrt(norm2));

    const int count = static_cast<int>(ids.size());
    const int k = static_cast<int>(plane1.size());
    Eigen::MatrixXd system(k + 1, count);
    system.topRows(k) = geom.vertices.transpose();
    system.bottomRows(1).setOnes();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(system);

    Eigen::VectorXd rhs0(k + 1), rhs_dir(k + 1);
    rhs0.head(k) = anchor.x() * plane1 + anchor.y() * plane2;
    rhs0[k] = 1.0;
    rhs_dir.head(k) = direction.x() * plane1 + direction.y() * plane2;
    rhs_dir[k] = 0.0;
    const Eigen::VectorXd lambda0 = qr.solve(rhs0);
    const Eigen::VectorXd lambda_dir = qr.solve(rhs_dir);

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    int bind_lo = kNoVertex, bind_hi = kNoVertex;
    for (int i = 0; i < count; ++i) {
        const double a = lambda0[i];
        const double d = lambda_dir[i];
        if (std::abs(d) <= 1e-13) {
            if (a < -kTol) return section;  // line misses the simplex entirely
            continue;
        }
        const double bound = -a / d;
        if (d > 0.0) {
            if (bound > lo) {
                lo = bound;
                bind_lo = ids[i];
            }
        } else {
            if (bound < hi) {
                hi = bound;
                bind_hi = ids[i];
            }
        }
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi + 1e-12) {
        return section;
    }
    section.empty = false;
    section.p0 = anchor + lo * direction;
    section.p1 = anchor + hi * direction;
    section.bind0 = bind_lo;
    section.bind1 = bind_hi;
    return section;
}

// Gift-wrap rotation about the affine hull of `base` (k-1 points spanning a
// (k-2)-face), starting from a supporting normal `outward`. Returns the
// first point touched by the rotating hyperplane. When `leaving` is given,
// the rotation direction moves away from that vertex, which yields the
// unique other facet through the ridge.
int rotate_about(const sampler::PointCloud& cloud, const std::vector<int>& base, int k,
                 const Eigen::VectorXd& outward, int leaving, bool flip) {
    const Eigen::VectorXd origin_pt = proj_point(cloud, base[0], k);
    const int face_dim = static_cast<int>(base.size()) - 1;

    Eigen::MatrixXd span(k, face_dim + 1);
    for (int i = 1; i <= face_dim; ++i) {
        span.col(i - 1) = proj_point(cloud, base[i], k) - origin_pt;
    }
    // Re-orthogonalize the supporting normal against the face directions.
    Eigen::VectorXd axis1 = outward;
    if (face_dim > 0) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(span.leftCols(face_dim));
        Eigen::MatrixXd q = qr.householderQ();
        for (int i = 0; i < face_dim; ++i) {
            axis1 -= q.col(i).dot(axis1) * q.col(i);
        }
    }
    if (axis1.norm() <= 1e-12) {
        fail("degenerate-geometry", "supporting normal degenerates on the pivot face");
    }
    axis1.normalize();
    span.col(face_dim) = axis1;
    Eigen::FullPivHouseholderQR<Eigen::MatrixXd> full(span);
    Eigen::VectorXd axis2 = full.matrixQ().col(k - 1);

    if (leaving != kNoVertex) {
        const double y = axis2.dot(proj_point(cloud, leaving, k) - origin_pt);
        if (std::abs(y) <= 1e-12) {
            fail("degenerate-geometry", "pivot vertex lies on the ridge affine hull");
        }
        if (y < 0.0) axis2 = -axis2;
    } else if (flip) {
        axis2 = -axis2;
    }

    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kThreeHalfPi = 3.0 * std::numbers::pi / 2.0;
    double best_angle = -1.0;
    double second_angle = -1.0;
    int best = kNoVertex;
    auto consider = [&](int id) {
        if (id == leaving) return;
        for (int b : base) {
            if (id == b) return;
        }
        const Eigen::VectorXd w = proj_point(cloud, id, k) - origin_pt;
        const double x = axis1.dot(w);
        const double y = axis2.dot(w);
        const double radius = std::hypot(x, y);
        if (radius <= 1e-12) return;  // on the face's affine hull
        if (x > 1e-7 * std::max(1.0, radius)) {
            fail("degenerate-geometry", "support violated while rotating about a face");
        }
        double angle = std::atan2(y, x);
        if (angle < 0.0) angle += 2.0 * std::numbers::pi;
        angle = std::clamp(angle, kHalfPi, kThreeHalfPi);
        if (angle > best_angle) {
            second_angle = best_angle;
            best_angle = angle;
            best = id;
        } else if (angle > second_angle) {
            second_angle = angle;
        }
    };
    consider(hull::kOriginId);
    for (int i = 0; i < cloud.m(); ++i) consider(i);

    if (best == kNoVertex) {
        fail("degenerate-geometry", "no candidate point for the rotating hyperplane");
    }
    if (second_angle > best_angle - 1e-10) {
        fail("degenerate-geometry", "tie while rotating about a face");
    }
    return best;
}

bool ray_crosses(const Section& section, bool& degenerate) {
    const double ya = section.p0.y();
    const double yb = section.p1.y();
    constexpr double kAxisTol = 1e-11;
    if (std::abs(ya) <= kAxisTol || std::abs(yb) <= kAxisTol) {
        degenerate = true;
        return false;
    }
    if ((ya > 0.0) == (yb > 0.0)) return false;
    const double t = ya / (ya - yb);
    const double xc = section.p0.x() + t * (section.p1.x() - section.p0.x());
    if (std::abs(xc) <= kTol) {
        degenerate = true;
        return false;
    }
    return xc > 0.0;
}

}  // namespace

LPSolution solve_shadow_vertex(const LPInstance& instance) {
    const sampler::PointCloud& cloud = instance.cloud;
    const int n = cloud.n;
    const std::int64_t m = cloud.m();
    if (n < 2) fail("validation", "shadow vertex needs n >= 2");
    if (m < n) fail("validation", "shadow vertex needs m >= n");
    if (instance.objective.size() != n) {
        fail("validation", "objective dimension does not match the cloud");
    }
    const double vnorm = instance.objective.norm();
    if (vnorm <= 0.0) fail("validation", "objective vector must be nonzero");
    const Eigen::VectorXd objective = instance.objective / vnorm;

    LPSolution solution;
    solution.pivots_by_dim.assign(n - 1, 0);

    // Stage k = 2: extreme projected point in the objective direction.
    const Eigen::Vector2d dir2 = objective.head(2);
    if (dir2.norm() <= kTol) {
        fail("degenerate-geometry", "objective is orthogonal to the first two coordinates");
    }
    int extreme = hull::kOriginId;
    double best_dot = 0.0;
    for (int i = 0; i < m; ++i) {
        const double d = cloud.points.row(i).head(2).dot(dir2);
        if (d > best_dot) {
            best_dot = d;
            extreme = i;
        }
    }
    auto finish_no_facet = [&]() {
        solution.status = LPStatus::NoFacet;
        for (auto p : solution.pivots_by_dim) solution.total_pivots += p;
        return solution;
    };
    if (extreme == hull::kOriginId || best_dot <= kTol) {
        // The origin is extreme for the projected objective: the ray leaves
        // through a face of Y containing 0, so the primal is unbounded.
        return finish_no_facet();
    }

    std::vector<int> optimal_face = {extreme};
    Eigen::VectorXd support_normal = Eigen::VectorXd(dir2.normalized());

    for (int k = 2; k <= n; ++k) {
        const Eigen::VectorXd dirk = objective.head(k);
        if (dirk.norm() <= kTol) {
            fail("degenerate-geometry", "objective projects to zero at stage " +
                                            std::to_string(k));
        }
        const Eigen::VectorXd plane1 = dirk.normalized();
        Eigen::VectorXd plane2 = Eigen::VectorXd::Unit(k, k - 1);
        plane2 -= plane2.dot(plane1) * plane1;
        if (plane2.norm() <= kTol) {
            fail("degenerate-geometry", "shadow plane collapses at stage " + std::to_string(k));
        }
        plane2.normalize();

        Eigen::VectorXd interior = Eigen::VectorXd::Zero(k);
        for (int i = 0; i < m; ++i) interior += cloud.points.row(i).head(k).transpose();
        interior /= static_cast<double>(m + 1);

        Eigen::VectorXd lifted = Eigen::VectorXd::Zero(k);
        lifted.head(support_normal.size()) = support_normal;

        auto start_facet = [&](bool flip) {
            std::vector<int> ids = optimal_face;
            ids.push_back(rotate_about(cloud, optimal_face, k, lifted, kNoVertex, flip));
            std::sort(ids.begin(), ids.end());
            return ids;
        };

        std::vector<int> facet = start_facet(false);
        FacetGeom geom = facet_geom(cloud, facet, k, interior);
        Section section = facet_section(facet, geom, plane1, plane2);
        if (section.empty) {
            facet = start_facet(true);
            geom = facet_geom(cloud, facet, k, interior);
            section = facet_section(facet, geom, plane1, plane2);
        }
        if (section.empty || section.parallel) {
            fail("degenerate-geometry", "starting simplex misses the shadow plane");
        }

        int entry = kNoVertex;
        const std::int64_t pivot_cap = 1000 + 30 * m;
        std::int64_t iterations = 0;
        while (true) {
            if (++iterations > pivot_cap) {
                fail("degenerate-geometry", "shadow walk failed to terminate");
            }
            if (std::find(facet.begin(), facet.end(), hull::kOriginId) != facet.end()) {
                // The walk reached a face of the dual containing the origin:
                // the ray exits through it and the primal is unbounded. The
                // origin also puts a section endpoint at (0, 0), so this must
                // precede the graze check below.
                return finish_no_facet();
            }
            bool degenerate = false;
            if (ray_crosses(section, degenerate)) break;
            if (degenerate) {
                fail("degenerate-geometry", "objective ray grazes a shadow polygon vertex");
            }

            int exit_vertex;
            if (entry == kNoVertex) {
                const double angle0 = std::atan2(section.p0.y(), section.p0.x());
                const double angle1 = std::atan2(section.p1.y(), section.p1.x());
                exit_vertex = std::abs(angle0) <= std::abs(angle1) ? section.bind0 : section.bind1;
            } else if (section.bind0 == entry && section.bind1 != entry) {
                exit_vertex = section.bind1;
            } else if (section.bind1 == entry && section.bind0 != entry) {
                exit_vertex = section.bind0;
            } else {
                fail("degenerate-geometry", "shadow segment endpoints are ambiguous");
            }

            std::vector<int> ridge;
            ridge.reserve(facet.size() - 1);
            for (int id : facet) {
                if (id != exit_vertex) ridge.push_back(id);
            }
            const int entering = rotate_about(cloud, ridge, k, geom.normal, exit_vertex, false);
            facet = ridge;
            facet.push_back(entering);
            std::sort(facet.begin(), facet.end());
            geom = facet_geom(cloud, facet, k, interior);
            section = facet_section(facet, geom, plane1, plane2);
            if (section.empty || section.parallel) {
                fail("degenerate-geometry", "pivot left the shadow plane");
            }
            entry = entering;
            ++solution.pivots_by_dim[k - 2];
        }

        optimal_face = facet;
        support_normal = geom.normal;
    }

    solution.status = LPStatus::Optimal;
    solution.facet = optimal_face;
    Eigen::MatrixXd normals(n, n);
    for (int i = 0; i < n; ++i) normals.row(i) = cloud.points.row(optimal_face[i]);
    solution.x_star = recover_primal(normals);
    for (auto p : solution.pivots_by_dim) solution.total_pivots += p;
    return solution;
}

Eigen::VectorXd recover_primal(const Eigen::MatrixXd& normals) {
    if (normals.rows() != normals.cols()) {
        fail("validation", "recover_primal needs a square system");
    }
    const int n = static_cast<int>(normals.rows());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(normals, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues()[n - 1];
    const double smax = svd.singularValues()[0];
    if (smin <= 0.0 || smax / smin > 1e12) {
        fail("singular-system", "facet normal system is numerically singular");
    }
    const Eigen::VectorXd x = svd.solve(Eigen::VectorXd::Ones(n));
    if ((normals * x - Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() >
        1e-9 * std::max(1.0, x.norm())) {
        fail("singular-system", "primal recovery residual is too large");
    }
    return x;
}

namespace {

std::pair<Eigen::VectorXd, Eigen::VectorXd> orthonormal_plane(const Eigen::VectorXd& u,
                                                              const Eigen::VectorXd& v) {
    if (u.size() != v.size()) fail("validation", "plane basis dimensions differ");
    if (u.norm() <= kTol) fail("validation", "plane vector u is zero");
    Eigen::VectorXd b1 = u.normalized();
    Eigen::VectorXd b2 = v - v.dot(b1) * b1;
    if (b2.norm() <= kTol) fail("validation", "plane vectors u, v are linearly dependent");
    return {b1, b2.normalized()};
}

}  // namespace

SectionCount section_edge_count(const hull::Polytope& polytope, const Eigen::VectorXd& u,
                                const Eigen::VectorXd& v) {
    SectionCount result;
    std::tie(result.u, result.v) = orthonormal_plane(u, v);
    // Count edges of the section polygon: a facet touching the plane in a
    // single point contributes nothing, and when the plane contains a ridge
    // (symmetric fixtures) both cofacets trace the same edge — collapse them.
    std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>> seen;
    for (const auto& segment : section_segments(polytope, u, v)) {
        if ((segment.p1 - segment.p0).norm() <= kTol) continue;
        Eigen::Vector2d lo = segment.p0, hi = segment.p1;
        if (std::make_pair(hi.x(), hi.y()) < std::make_pair(lo.x(), lo.y())) std::swap(lo, hi);
        bool duplicate = false;
        for (const auto& [a, b] : seen) {
            if ((a - lo).norm() <= kTol && (b - hi).norm() <= kTol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            seen.emplace_back(lo, hi);
            ++result.edge_count;
        }
    }
    return result;
}

std::vector<SectionSegment> section_segments(const hull::Polytope& polytope,
                                             const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    auto [plane1, plane2] = orthonormal_plane(u, v);
    const int n = polytope.cloud.n;
    std::vector<SectionSegment> segments;
    for (std::size_t f = 0; f < polytope.facets.size(); ++f) {
        const auto& facet = polytope.facets[f];
        FacetGeom geom;
        geom.vertices.resize(static_cast<int>(facet.vertices.size()), n);
        for (std::size_t i = 0; i < facet.vertices.size(); ++i) {
            geom.vertices.row(static_cast<int>(i)) =
                proj_point(polytope.cloud, facet.vertices[i], n).transpose();
        }
        geom.normal = facet.normal;
        geom.offset = facet.offset;
        const Section section = facet_section(facet.vertices, geom, plane1, plane2);
        if (section.parallel) {
            fail("degenerate-section", "plane is parallel to a facet hyperplane");
        }
        if (!section.empty) {
            segments.push_back({static_cast<int>(f), section.p0, section.p1});
        }
    }
    return segments;
}

}  // namespace randpoly::shadow
