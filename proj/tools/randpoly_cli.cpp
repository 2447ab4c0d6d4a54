// Command-line front end: sampling, hulls, shadow-vertex LPs, spherical
// measures, analytic bounds, and the Monte Carlo experiment harness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "randpoly/analysis.hpp"
#include "randpoly/error.hpp"
#include "randpoly/geometry.hpp"
#include "randpoly/harness.hpp"
#include "randpoly/hull.hpp"
#include "randpoly/rng.hpp"
#include "randpoly/sampler.hpp"
#include "randpoly/shadow.hpp"

namespace {

using namespace randpoly;
using nlohmann::json;

// --out PATH writes there; otherwise stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) fail("validation", "cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string fmt(double x, int digits) {
    std::ostringstream out;
    out.precision(digits);
    out << x;
    return out.str();
}

sampler::PointCloud read_cloud_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("validation", "cannot open cloud file " + path);
    std::string line;
    if (!std::getline(in, line)) fail("validation", "cloud file is empty");
    int n = 1;
    for (char c : line) n += (c == ',');
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        int got = 0;
        while (std::getline(row, cell, ',')) {
            values.push_back(std::stod(cell));
            ++got;
        }
        if (got != n) fail("validation", "cloud row has " + std::to_string(got) +
                                             " cells, expected " + std::to_string(n));
    }
    if (values.empty()) fail("validation", "cloud file has no points");
    sampler::PointCloud cloud;
    cloud.n = n;
    const std::int64_t m = static_cast<std::int64_t>(values.size()) / n;
    cloud.points.resize(m, n);
    for (std::int64_t i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) cloud.points(i, j) = values[i * n + j];
    }
    return cloud;
}

void write_cloud_csv(const sampler::PointCloud& cloud, std::ostream& out) {
    for (int j = 0; j < cloud.n; ++j) out << (j ? "," : "") << "x" << (j + 1);
    out << "\n";
    out.precision(17);
    for (std::int64_t i = 0; i < cloud.m(); ++i) {
        for (int j = 0; j < cloud.n; ++j) {
            if (j) out << ",";
            out << cloud.points(i, j);
        }
        out << "\n";
    }
}

struct CloudArgs {
    int n = 3;
    std::int64_t m = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string cloud_path;

    void add_to(CLI::App* cmd, bool with_file) {
        cmd->add_option("--n", n, "ambient dimension");
        cmd->add_option("--m", m, "number of sphere points");
        cmd->add_option("--seed", seed, "seed value");
        cmd->add_option("--stream", stream, "seed stream (sub-stream selector)");
        if (with_file) {
            cmd->add_option("--cloud", cloud_path, "read the point cloud from a CSV file");
        }
    }

    sampler::PointCloud resolve() const {
        if (!cloud_path.empty()) return read_cloud_csv(cloud_path);
        if (m <= 0) fail("validation", "either --cloud or --m is required");
        return sampler::sample_polytope(n, m, {seed, stream});
    }
};

json facet_stats_json(const hull::Polytope& poly, const hull::HullStats& stats) {
    return json{{"sidedness_tests", stats.sidedness_tests},
                {"facets_created", stats.facets_created},
                {"facets_deleted", stats.facets_deleted},
                {"f_count", poly.facets.size()}};
}

int run(int argc, char** argv) {
    CLI::App app{"random polytopes on the sphere: hulls, shadow-vertex LPs, measures"};
    app.require_subcommand(1);

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "draw m uniform points on S^{n-1} as CSV");
    CloudArgs sample_args;
    sample_args.add_to(sample, false);
    std::string sample_out;
    sample->add_option("--out", sample_out, "output path (default stdout)");

    // ---- hull ----
    auto* hull_cmd = app.add_subcommand("hull", "incremental hull: facet CSV plus a stats block");
    CloudArgs hull_args;
    hull_args.add_to(hull_cmd, true);
    bool include_origin = false;
    hull_cmd->add_flag("--include-origin", include_origin, "hull of conv(0, a_1..a_m)");
    std::string hull_out;
    hull_cmd->add_option("--out", hull_out, "facet CSV path (default stdout)");

    // ---- lp ----
    auto* lp = app.add_subcommand("lp", "shadow-vertex solve of max <v,x> s.t. <a_i,x> <= 1");
    CloudArgs lp_args;
    lp_args.add_to(lp, true);
    std::string objective_csv;
    bool random_objective = false;
    lp->add_option("--objective", objective_csv, "objective vector, comma-separated reals");
    lp->add_flag("--random-objective", random_objective, "draw the objective from the seed");
    std::string lp_out;
    lp->add_option("--out", lp_out, "output path (default stdout)");

    // ---- geometry ----
    auto* geo = app.add_subcommand("geometry", "evaluate a spherical measure (12 digits)");
    std::string op = "cap-volume";
    int geo_n = 3;
    double geo_h = 0.5, geo_r = 0.5, geo_target = 0.1, geo_c = 8.0;
    std::int64_t geo_m = 100;
    geo->add_option("--op", op,
                    "one of: ball-volume, sphere-surface, cap-volume, cap-volume-quadrature, "
                    "cap-surface, belt-volume, belt-surface, cap-volume-asymptotic, "
                    "cap-fraction, solve-cap-fraction, solve-delta")
        ->required();
    geo->add_option("--n", geo_n, "dimension");
    geo->add_option("--height", geo_h, "cap height in [0, 1]");
    geo->add_option("--radius", geo_r, "belt radius in [0, 1]");
    geo->add_option("--target", geo_target, "cap fraction target for solve-cap-fraction");
    geo->add_option("--m", geo_m, "point count for solve-delta");
    geo->add_option("--c", geo_c, "constant c in target c log(m)/m for solve-delta");

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "analytic constants and bounds as JSON");
    int bounds_n = 3;
    std::int64_t bounds_m = 100;
    std::optional<double> bounds_h;
    bounds->add_option("--n", bounds_n, "dimension");
    bounds->add_option("--m", bounds_m, "point count");
    bounds->add_option("--height", bounds_h, "also report the facet survival probability at offset h");
    std::string bounds_out;
    bounds->add_option("--out", bounds_out, "output path (default stdout)");

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "seeded Monte Carlo scaling experiments");
    std::string exp_name = "facets";
    int exp_n = 3;
    std::vector<std::int64_t> m_grid;
    int trials = 10;
    std::uint64_t exp_seed = 0, exp_stream = 0;
    std::string exp_out, format = "csv";
    exp->add_option("--experiment", exp_name,
                    "facets | shadow-pivots | beneath-beyond-cost | hausdorff | section-edges");
    exp->add_option("--n", exp_n, "dimension");
    exp->add_option("--m-grid", m_grid, "comma-separated m values")
        ->required()
        ->delimiter(',');
    exp->add_option("--trials", trials, "trials per grid cell");
    exp->add_option("--seed", exp_seed, "seed value");
    exp->add_option("--stream", exp_stream, "seed stream");
    exp->add_option("--out", exp_out, "output path (default stdout)");
    exp->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    if (*sample) {
        if (sample_args.m <= 0) fail("validation", "--m is required for sample");
        Output out(sample_out);
        write_cloud_csv(sample_args.resolve(), out.stream());
        return 0;
    }

    if (*hull_cmd) {
        const auto cloud = hull_args.resolve();
        const auto [poly, stats] = hull::beneath_beyond(cloud, include_origin);
        Output out(hull_out);
        auto& os = out.stream();
        for (int j = 0; j < cloud.n; ++j) os << (j ? "," : "") << "v" << (j + 1);
        for (int j = 0; j < cloud.n; ++j) os << ",b" << (j + 1);
        os << ",h\n";
        os.precision(17);
        for (const auto& f : poly.facets) {
            for (std::size_t j = 0; j < f.vertices.size(); ++j) {
                os << (j ? "," : "") << f.vertices[j];
            }
            for (int j = 0; j < cloud.n; ++j) os << "," << f.normal[j];
            os << "," << f.offset << "\n";
        }
        // stats go to stdout so a facet file stays pure CSV
        std::cout << facet_stats_json(poly, stats).dump(2) << "\n";
        return 0;
    }

    if (*lp) {
        const auto cloud = lp_args.resolve();
        Eigen::VectorXd v;
        if (!objective_csv.empty()) {
            std::istringstream in(objective_csv);
            std::vector<double> parts;
            std::string cell;
            while (std::getline(in, cell, ',')) parts.push_back(std::stod(cell));
            if (static_cast<int>(parts.size()) != cloud.n) {
                fail("validation", "--objective needs exactly n components");
            }
            v = Eigen::Map<Eigen::VectorXd>(parts.data(), cloud.n);
        } else if (random_objective) {
            rng::Rng gen({lp_args.seed, rng::hash_combine(lp_args.stream, 0x0b7ec71fULL)});
            v = sampler::sample_sphere_point(cloud.n, gen);
        } else {
            fail("validation", "provide --objective or --random-objective");
        }
        const auto sol = shadow::solve_shadow_vertex({cloud, v});
        json doc;
        doc["status"] = sol.status == shadow::LPStatus::Optimal ? "optimal" : "no-facet";
        doc["facet"] = sol.facet;
        doc["x_star"] = std::vector<double>(sol.x_star.data(), sol.x_star.data() + sol.x_star.size());
        doc["pivots_by_dim"] = sol.pivots_by_dim;
        doc["total_pivots"] = sol.total_pivots;
        Output out(lp_out);
        out.stream() << doc.dump(2) << "\n";
        return 0;
    }

    if (*geo) {
        double value = 0.0;
        if (op == "ball-volume") value = geometry::ball_volume(geo_n);
        else if (op == "sphere-surface") value = geometry::sphere_surface(geo_n);
        else if (op == "cap-volume") value = geometry::cap_volume(geo_n, geo_h);
        else if (op == "cap-volume-quadrature") value = geometry::cap_volume_quadrature(geo_n, geo_h);
        else if (op == "cap-surface") value = geometry::cap_surface(geo_n, geo_h);
        else if (op == "belt-volume") value = geometry::belt_volume(geo_n, geo_r);
        else if (op == "belt-surface") value = geometry::belt_surface(geo_n, geo_r);
        else if (op == "cap-volume-asymptotic") value = geometry::cap_volume_asymptotic(geo_n, geo_h);
        else if (op == "cap-fraction") value = geometry::cap_fraction(geo_n, geo_h);
        else if (op == "solve-cap-fraction") value = geometry::solve_cap_fraction(geo_n, geo_target);
        else if (op == "solve-delta") value = geometry::solve_delta(geo_n, geo_m, geo_c);
        else fail("validation", "unknown geometry op " + op);
        std::cout << fmt(value, 12) << "\n";
        return 0;
    }

    if (*bounds) {
        json doc;
        doc["n"] = bounds_n;
        doc["m"] = bounds_m;
        doc["facet_constant"] = analysis::facet_constant(bounds_n);
        doc["facet_upper_bound"] = analysis::facet_upper_bound(bounds_n, bounds_m);
        doc["borgwardt_bound"] = analysis::borgwardt_bound(bounds_n, bounds_m);
        if (bounds_h) {
            doc["facet_survival_probability"] =
                analysis::facet_survival_probability(bounds_n, bounds_m, *bounds_h);
        }
        Output out(bounds_out);
        out.stream() << doc.dump(2) << "\n";
        return 0;
    }

    if (*exp) {
        harness::ExperimentConfig cfg;
        cfg.kind = harness::experiment_from_name(exp_name);
        cfg.n = exp_n;
        cfg.m_grid = m_grid;
        cfg.trials = trials;
        cfg.seed = {exp_seed, exp_stream};
        cfg.output_path = exp_out;
        const auto records = harness::run_experiment(cfg);
        std::optional<harness::ExponentFit> fit;
        if (records.size() >= 3) fit = harness::fit_exponent(records);
        const auto fmt_kind =
            format == "json" ? harness::ReportFormat::Json : harness::ReportFormat::Csv;
        Output out(exp_out);
        harness::emit_report(records, fit ? &*fit : nullptr, fmt_kind, out.stream());
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "validation" ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
