#include "randpoly/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "randpoly/analysis.hpp"
#include "randpoly/error.hpp"
#include "randpoly/geometry.hpp"
#include "randpoly/hull.hpp"
#include "randpoly/sampler.hpp"
#include "randpoly/shadow.hpp"

namespace randpoly::harness {

namespace {

using rng::Seed;

Seed trial_cloud_seed(ExperimentKind kind, int n, std::int64_t m, int trial, const Seed& seed) {
    std::uint64_t s = seed.stream;
    s = rng::hash_combine(s, static_cast<std::uint64_t>(kind) + 1);
    s = rng::hash_combine(s, static_cast<std::uint64_t>(n));
    s = rng::hash_combine(s, static_cast<std::uint64_t>(m));
    s = rng::hash_combine(s, static_cast<std::uint64_t>(trial));
    return Seed{seed.value, s};
}

Seed auxiliary_seed(const Seed& trial_seed) {
    return Seed{trial_seed.value, rng::hash_combine(trial_seed.stream, 0x0b7ec71fULL)};
}

int worker_count() {
    if (const char* env = std::getenv("RANDPOLY_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<int>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

double reference_value(ExperimentKind kind, int n, std::int64_t m) {
    switch (kind) {
        case ExperimentKind::Facets:
            return analysis::facet_constant(n) * static_cast<double>(m);
        case ExperimentKind::ShadowPivots:
            return analysis::borgwardt_bound(n, m);
        case ExperimentKind::BeneathBeyondCost:
            return static_cast<double>(m) * static_cast<double>(m);
        case ExperimentKind::Hausdorff:
            return geometry::solve_delta(n, m, 2.0 * (n + 1));
        case ExperimentKind::SectionEdges:
            return std::pow(static_cast<double>(m), 1.0 / (n - 1));
    }
    return 0.0;
}

std::string format_number(double value) {
    std::ostringstream out;
    out << std::setprecision(12) << value;
    return out.str();
}

}  // namespace

const char* experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Facets: return "facets";
        case ExperimentKind::ShadowPivots: return "shadow-pivots";
        case ExperimentKind::BeneathBeyondCost: return "beneath-beyond-cost";
        case ExperimentKind::Hausdorff: return "hausdorff";
        case ExperimentKind::SectionEdges: return "section-edges";
    }
    return "unknown";
}

ExperimentKind experiment_from_name(const std::string& name) {
    if (name == "facets") return ExperimentKind::Facets;
    if (name == "shadow-pivots") return ExperimentKind::ShadowPivots;
    if (name == "beneath-beyond-cost") return ExperimentKind::BeneathBeyondCost;
    if (name == "hausdorff") return ExperimentKind::Hausdorff;
    if (name == "section-edges") return ExperimentKind::SectionEdges;
    fail("validation", "unknown experiment '" + name + "'");
}

double measure_trial(ExperimentKind kind, int n, std::int64_t m, int trial, const Seed& seed) {
    const Seed cloud_seed = trial_cloud_seed(kind, n, m, trial, seed);
    const sampler::PointCloud cloud = sampler::sample_polytope(n, m, cloud_seed);

    switch (kind) {
        case ExperimentKind::Facets: {
            auto [polytope, stats] = hull::beneath_beyond(cloud, false);
            return static_cast<double>(polytope.facets.size());
        }
        case ExperimentKind::BeneathBeyondCost: {
            auto [polytope, stats] = hull::beneath_beyond(cloud, false);
            return static_cast<double>(stats.sidedness_tests);
        }
        case ExperimentKind::Hausdorff: {
            auto [polytope, stats] = hull::beneath_beyond(cloud, false);
            return hull::hausdorff_to_sphere(polytope);
        }
        case ExperimentKind::ShadowPivots: {
            rng::Rng aux(auxiliary_seed(cloud_seed));
            shadow::LPInstance instance{cloud, sampler::sample_sphere_point(n, aux)};
            const shadow::LPSolution solution = shadow::solve_shadow_vertex(instance);
            if (solution.status != shadow::LPStatus::Optimal) {
                fail("no-facet", "objective ray left through an origin face");
            }
            return static_cast<double>(solution.total_pivots);
        }
        case ExperimentKind::SectionEdges: {
            auto [polytope, stats] = hull::beneath_beyond(cloud, false);
            rng::Rng aux(auxiliary_seed(cloud_seed));
            const Eigen::VectorXd u = sampler::sample_sphere_point(n, aux);
            Eigen::VectorXd v = sampler::sample_sphere_point(n, aux);
            while ((v - v.dot(u) * u).norm() <= 1e-6) {
                v = sampler::sample_sphere_point(n, aux);
            }
            return static_cast<double>(shadow::section_edge_count(polytope, u, v).edge_count);
        }
    }
    fail("validation", "unhandled experiment kind");
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) fail("validation", "trials must be >= 1");
    if (config.m_grid.empty()) fail("validation", "m-grid must be nonempty");
    for (std::int64_t m : config.m_grid) {
        if (m < config.n + 1) {
            fail("validation", "m-grid entries must be at least n + 1");
        }
    }

    const std::size_t cells = config.m_grid.size();
    const std::size_t total = cells * static_cast<std::size_t>(config.trials);
    std::vector<std::optional<double>> values(total);
    std::vector<double> trial_seconds(total, 0.0);

    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        while (true) {
            const std::size_t index = cursor.fetch_add(1);
            if (index >= total) return;
            const std::size_t cell = index / config.trials;
            const int trial = static_cast<int>(index % config.trials);
            const auto start = std::chrono::steady_clock::now();
            try {
                values[index] = measure_trial(config.kind, config.n, config.m_grid[cell], trial,
                                              config.seed);
            } catch (const Error&) {
                values[index] = std::nullopt;
            }
            trial_seconds[index] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };

    const int workers = std::min<int>(worker_count(), static_cast<int>(total));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& thread : pool) thread.join();

    std::size_t failures_total = 0;
    for (const auto& value : values) {
        if (!value) ++failures_total;
    }
    if (failures_total * 100 > total) {
        fail("validation", "more than 1% of trials failed (" + std::to_string(failures_total) +
                               " of " + std::to_string(total) + ")");
    }

    std::vector<ExperimentRecord> records;
    records.reserve(cells);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        ExperimentRecord record;
        record.experiment = experiment_name(config.kind);
        record.n = config.n;
        record.m = config.m_grid[cell];
        record.trials = config.trials;
        record.reference = reference_value(config.kind, config.n, record.m);

        double sum = 0.0, sum_sq = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        int used = 0;
        for (int trial = 0; trial < config.trials; ++trial) {
            const std::size_t index = cell * config.trials + trial;
            record.seconds += trial_seconds[index];
            if (!values[index]) {
                ++record.failures;
                continue;
            }
            const double x = *values[index];
            sum += x;
            sum_sq += x * x;
            lo = std::min(lo, x);
            hi = std::max(hi, x);
            ++used;
        }
        if (used == 0) fail("validation", "every trial failed in one grid cell");
        record.mean = sum / used;
        record.stddev =
            used > 1 ? std::sqrt(std::max(0.0, (sum_sq - sum * sum / used) / (used - 1))) : 0.0;
        record.min = lo;
        record.max = hi;
        records.push_back(std::move(record));
    }
    return records;
}

ExponentFit fit_exponent(const std::vector<ExperimentRecord>& records) {
    std::vector<double> xs, ys;
    for (const auto& record : records) {
        if (record.mean <= 0.0) fail("insufficient-grid", "means must be positive for a log fit");
        xs.push_back(std::log(static_cast<double>(record.m)));
        ys.push_back(std::log(record.mean));
    }
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) {
        fail("insufficient-grid", "need at least 3 distinct m values");
    }

    const std::size_t count = xs.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
        syy += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    ExponentFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = mean_y - fit.exponent * mean_x;
    if (syy <= 0.0) {
        fit.r_squared = 1.0;
    } else {
        double residual = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double e = ys[i] - (fit.intercept + fit.exponent * xs[i]);
            residual += e * e;
        }
        fit.r_squared = std::clamp(1.0 - residual / syy, 0.0, 1.0);
    }
    return fit;
}

void emit_report(const std::vector<ExperimentRecord>& records, const ExponentFit* fit,
                 ReportFormat format, std::ostream& out) {
    if (records.empty()) fail("nonempty-required", "cannot emit a report without records");

    if (format == ReportFormat::Csv) {
        out << "experiment,n,m,trials,mean,std,min,max,reference,seconds\n";
        for (const auto& r : records) {
            out << r.experiment << ',' << r.n << ',' << r.m << ',' << r.trials << ','
                << format_number(r.mean) << ',' << format_number(r.stddev) << ','
                << format_number(r.min) << ',' << format_number(r.max) << ','
                << format_number(r.reference) << ',' << format_number(r.seconds) << '\n';
        }
        return;
    }

    nlohmann::json doc;
    doc["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        doc["records"].push_back({{"experiment", r.experiment},
                                  {"n", r.n},
                                  {"m", r.m},
                                  {"trials", r.trials},
                                  {"mean", r.mean},
                                  {"std", r.stddev},
                                  {"min", r.min},
                                  {"max", r.max},
                                  {"reference", r.reference},
                                  {"seconds", r.seconds},
                                  {"failures", r.failures}});
    }
    if (fit != nullptr) {
        doc["fit"] = {{"exponent", fit->exponent},
                      {"intercept", fit->intercept},
                      {"r_squared", fit->r_squared}};
    }
    out << doc.dump(2) << '\n';
}

void emit_report_file(const std::vector<ExperimentRecord>& records, const ExponentFit* fit,
                      ReportFormat format, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("validation", "cannot open report file '" + path + "' for writing");
    emit_report(records, fit, format, out);
    if (!out.good()) fail("validation", "write failed for report file '" + path + "'");
}

std::vector<ExperimentRecord> read_report_csv(std::istream& in) {
    std::vector<ExperimentRecord> records;
    std::string line;
    if (!std::getline(in, line)) fail("validation", "empty CSV report");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        ExperimentRecord r;
        std::getline(row, r.experiment, ',');
        auto next_field = [&]() {
            if (!std::getline(row, field, ',')) fail("validation", "short CSV row: " + line);
            return field;
        };
        r.n = std::stoi(next_field());
        r.m = std::stoll(next_field());
        r.trials = std::stoi(next_field());
        r.mean = std::stod(next_field());
        r.stddev = std::stod(next_field());
        r.min = std::stod(next_field());
        r.max = std::stod(next_field());
        r.reference = std::stod(next_field());
        r.seconds = std::stod(next_field());
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace randpoly::harness
