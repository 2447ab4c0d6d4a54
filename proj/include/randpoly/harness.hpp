#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "randpoly/rng.hpp"

namespace randpoly::harness {

enum class ExperimentKind {
    Facets,            // facet count of P(n, m)
    ShadowPivots,      // total pivots of the shadow-vertex solve, random objective
    BeneathBeyondCost, // sidedness tests of the incremental hull
    Hausdorff,         // 1 - min facet offset
    SectionEdges,      // edges of P cut by a random 2-plane
};

const char* experiment_name(ExperimentKind kind);
ExperimentKind experiment_from_name(const std::string& name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Facets;
    int n = 3;
    std::vector<std::int64_t> m_grid;
    int trials = 1;
    rng::Seed seed;
    std::string output_path;  // informational; emit_report takes a stream
};

struct ExperimentRecord {
    std::string experiment;
    int n = 0;
    std::int64_t m = 0;
    int trials = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    double reference = 0.0;  // F_n * m, pivot bound, etc.
    double seconds = 0.0;    // wall time; informational only
    int failures = 0;        // trials that raised and were skipped
};

// Per-trial measurement, exposed so tests can pin individual trials. The
// trial stream depends only on (kind, n, m, trial), never on grid order.
double measure_trial(ExperimentKind kind, int n, std::int64_t m, int trial,
                     const rng::Seed& seed);

// Runs trials for every grid cell (in parallel across trials; RANDPOLY_THREADS
// caps the workers) and aggregates in trial order so results are
// deterministic for a given config.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

struct ExponentFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log(mean) against log(m).
ExponentFit fit_exponent(const std::vector<ExperimentRecord>& records);

enum class ReportFormat { Csv, Json };

void emit_report(const std::vector<ExperimentRecord>& records, const ExponentFit* fit,
                 ReportFormat format, std::ostream& out);
void emit_report_file(const std::vector<ExperimentRecord>& records, const ExponentFit* fit,
                      ReportFormat format, const std::string& path);

// Reads back a CSV report written by emit_report.
std::vector<ExperimentRecord> read_report_csv(std::istream& in);

}  // namespace randpoly::harness
