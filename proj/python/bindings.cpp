// Python bindings for the random-polytope library: sampling, hulls,
// shadow-vertex LPs, spherical measures, bounds, and the experiment harness.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "randpoly/analysis.hpp"
#include "randpoly/error.hpp"
#include "randpoly/geometry.hpp"
#include "randpoly/harness.hpp"
#include "randpoly/hull.hpp"
#include "randpoly/rng.hpp"
#include "randpoly/sampler.hpp"
#include "randpoly/shadow.hpp"

namespace py = pybind11;
using namespace randpoly;

namespace {

sampler::PointCloud cloud_from_matrix(const Eigen::MatrixXd& points) {
    sampler::PointCloud cloud;
    cloud.n = static_cast<int>(points.cols());
    cloud.points = points;
    return cloud;
}

py::dict polytope_to_dict(const hull::Polytope& poly) {
    py::list facets;
    for (const auto& f : poly.facets) {
        py::dict d;
        d["vertices"] = f.vertices;
        d["normal"] = f.normal;
        d["offset"] = f.offset;
        facets.append(d);
    }
    py::dict out;
    out["facets"] = facets;
    out["includes_origin"] = poly.includes_origin;
    out["contains_origin"] = hull::contains_origin(poly);
    return out;
}

py::dict stats_to_dict(const hull::HullStats& stats) {
    py::dict d;
    d["sidedness_tests"] = stats.sidedness_tests;
    d["facets_created"] = stats.facets_created;
    d["facets_deleted"] = stats.facets_deleted;
    d["points_skipped_inside"] = stats.points_skipped_inside;
    d["facet_counts"] = stats.facet_counts;
    return d;
}

py::dict record_to_dict(const harness::ExperimentRecord& r) {
    py::dict d;
    d["experiment"] = r.experiment;
    d["n"] = r.n;
    d["m"] = r.m;
    d["trials"] = r.trials;
    d["mean"] = r.mean;
    d["std"] = r.stddev;
    d["min"] = r.min;
    d["max"] = r.max;
    d["reference"] = r.reference;
    d["seconds"] = r.seconds;
    d["failures"] = r.failures;
    return d;
}

}  // namespace

PYBIND11_MODULE(_randpoly, mod) {
    mod.doc() = "Random polytopes from sphere points: hulls, shadow-vertex LPs, measures";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            if (e.code() == "validation") {
                PyErr_SetString(PyExc_ValueError, e.what());
            } else {
                PyErr_SetString(PyExc_RuntimeError, e.what());
            }
        }
    });

    // sampling
    mod.def(
        "sample",
        [](int n, std::int64_t m, std::uint64_t seed, std::uint64_t stream) {
            return sampler::sample_polytope(n, m, {seed, stream}).points;
        },
        py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("stream") = 0,
        "m uniform points on S^{n-1}, one row per point");

    // hulls
    mod.def(
        "hull",
        [](const Eigen::MatrixXd& points, bool include_origin) {
            const auto [poly, stats] = hull::beneath_beyond(cloud_from_matrix(points),
                                                            include_origin);
            py::dict out = polytope_to_dict(poly);
            out["stats"] = stats_to_dict(stats);
            return out;
        },
        py::arg("points"), py::arg("include_origin") = false,
        "incremental (Beneath-Beyond) hull with instrumentation counters");

    mod.def(
        "brute_force_hull",
        [](const Eigen::MatrixXd& points, bool include_origin) {
            return polytope_to_dict(hull::brute_force_facets(cloud_from_matrix(points),
                                                             include_origin));
        },
        py::arg("points"), py::arg("include_origin") = false,
        "exhaustive facet enumeration oracle");

    mod.def(
        "hausdorff_to_sphere",
        [](const Eigen::MatrixXd& points) {
            const auto poly = hull::beneath_beyond(cloud_from_matrix(points), false).first;
            return hull::hausdorff_to_sphere(poly);
        },
        py::arg("points"), "1 - min facet offset; requires the origin strictly inside");

    // shadow-vertex LP
    mod.def(
        "solve_lp",
        [](const Eigen::MatrixXd& points, const Eigen::VectorXd& objective) {
            const auto sol = shadow::solve_shadow_vertex({cloud_from_matrix(points), objective});
            py::dict d;
            d["status"] = sol.status == shadow::LPStatus::Optimal ? "optimal" : "no-facet";
            d["facet"] = sol.facet;
            d["x_star"] = sol.x_star;
            d["pivots_by_dim"] = sol.pivots_by_dim;
            d["total_pivots"] = sol.total_pivots;
            return d;
        },
        py::arg("points"), py::arg("objective"),
        "max <v, x> over <a_i, x> <= 1 via the dual shadow-vertex walk");

    mod.def(
        "section_edge_count",
        [](const Eigen::MatrixXd& points, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
           bool brute_force) {
            const auto cloud = cloud_from_matrix(points);
            const auto poly = brute_force ? hull::brute_force_facets(cloud, false)
                                          : hull::beneath_beyond(cloud, false).first;
            return shadow::section_edge_count(poly, u, v).edge_count;
        },
        py::arg("points"), py::arg("u"), py::arg("v"), py::arg("brute_force") = false,
        "number of hull facets met by the plane span(u, v)");

    // spherical measures
    mod.def("ball_volume", &geometry::ball_volume, py::arg("n"));
    mod.def("sphere_surface", &geometry::sphere_surface, py::arg("n"));
    mod.def("cap_volume", &geometry::cap_volume, py::arg("n"), py::arg("h"));
    mod.def("cap_volume_quadrature", &geometry::cap_volume_quadrature, py::arg("n"),
            py::arg("h"));
    mod.def("cap_surface", &geometry::cap_surface, py::arg("n"), py::arg("h"));
    mod.def("belt_volume", &geometry::belt_volume, py::arg("n"), py::arg("r"));
    mod.def("belt_surface", &geometry::belt_surface, py::arg("n"), py::arg("r"));
    mod.def("cap_volume_asymptotic", &geometry::cap_volume_asymptotic, py::arg("n"),
            py::arg("h"));
    mod.def("cap_fraction", &geometry::cap_fraction, py::arg("n"), py::arg("h"));
    mod.def("solve_cap_fraction", &geometry::solve_cap_fraction, py::arg("n"),
            py::arg("target"));
    mod.def("solve_delta", &geometry::solve_delta, py::arg("n"), py::arg("m"), py::arg("c"));

    // analytic constants and bounds
    mod.def("gamma_seq", &analysis::gamma_seq, py::arg("k_max"));
    mod.def("facet_constant", &analysis::facet_constant, py::arg("n"));
    mod.def("facet_upper_bound", &analysis::facet_upper_bound, py::arg("n"), py::arg("m"));
    mod.def("borgwardt_bound", &analysis::borgwardt_bound, py::arg("n"), py::arg("m"));
    mod.def("facet_survival_probability", &analysis::facet_survival_probability, py::arg("n"),
            py::arg("m"), py::arg("h"));

    // experiment harness
    mod.def(
        "run_experiment",
        [](const std::string& experiment, int n, const std::vector<std::int64_t>& m_grid,
           int trials, std::uint64_t seed, std::uint64_t stream) {
            harness::ExperimentConfig cfg;
            cfg.kind = harness::experiment_from_name(experiment);
            cfg.n = n;
            cfg.m_grid = m_grid;
            cfg.trials = trials;
            cfg.seed = {seed, stream};
            py::list out;
            for (const auto& r : harness::run_experiment(cfg)) out.append(record_to_dict(r));
            return out;
        },
        py::arg("experiment"), py::arg("n"), py::arg("m_grid"), py::arg("trials"),
        py::arg("seed") = 0, py::arg("stream") = 0,
        "seeded Monte Carlo run; one record dict per grid cell");

    mod.def(
        "fit_exponent",
        [](const std::vector<std::int64_t>& ms, const std::vector<double>& means) {
            if (ms.size() != means.size()) {
                fail("validation", "ms and means must have equal length");
            }
            std::vector<harness::ExperimentRecord> records(ms.size());
            for (std::size_t i = 0; i < ms.size(); ++i) {
                records[i].m = ms[i];
                records[i].mean = means[i];
            }
            const auto fit = harness::fit_exponent(records);
            py::dict d;
            d["exponent"] = fit.exponent;
            d["intercept"] = fit.intercept;
            d["r_squared"] = fit.r_squared;
            return d;
        },
        py::arg("ms"), py::arg("means"), "least-squares slope of log(mean) vs log(m)");
}
