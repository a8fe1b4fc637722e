#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heatfk/error.hpp"
#include "heatfk/families.hpp"
#include "heatfk/graph.hpp"
#include "heatfk/heat.hpp"
#include "heatfk/io.hpp"
#include "heatfk/metric.hpp"
#include "heatfk/report.hpp"

namespace heatfk {

// Config mistakes: unknown checks, empty grids, unreadable graph files.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct ExperimentConfig {
    std::string graph_file;  // takes precedence over family
    std::string family;      // FamilySpec::parse text
    MeasureKind measure = MeasureKind::counting;
    MetricRule metric = MetricRule::degree_path;
    std::vector<std::string> checks;
    std::vector<double> grid_t;
    std::vector<double> grid_r;
    std::vector<double> grid_eta;
    std::vector<Vertex> xs;  // empty: every vertex
    std::vector<Vertex> ys;  // empty: xs
    // Vertices removed from the host; nonempty selects Dirichlet-host mode.
    std::vector<Vertex> killed;
    // Scalars for the checkers: a, n, n_prime, R, R1, R2, r_hat, r1, r2, t1, t2,
    // t0, C, delta, subsets, seed, quad_panels.
    std::map<std::string, double> params;
    std::string profile;  // uniform | counting | general; empty: from the measure
    double tol = 1e-9;
    std::size_t cap = 16;
    std::string out_dir = "heatfk_out";

    // Throws ConfigError.
    void validate() const;
    // Canonical form used for the hash: everything except the output directory.
    Json to_json() const;
    std::string hash() const;
};

// Property tags, theorem names and the extra diagnostic checks.
std::vector<std::string> known_checks();
bool is_known_check(const std::string& name);

struct Workspace {
    std::string graph_name;
    WeightedGraph g;
    IntrinsicMetric metric;
    std::optional<HeatSemigroup> hs;
};

// Builds graph, metric and semigroup. The semigroup points into the returned
// object, so the workspace is handed out by pointer.
std::unique_ptr<Workspace> load_workspace(const ExperimentConfig& cfg);

// One report per check; HypothesisError and DomainError propagate.
PropertyReport run_check(const ExperimentConfig& cfg, const Workspace& ws, const std::string& check);

// HEATFK_OUT if set, else cfg.out_dir; created on demand.
std::string output_dir(const ExperimentConfig& cfg);

// Exit codes: 0 all hard gates hold, 1 some certified verdict fails, 2 config error.
int cmd_check(const ExperimentConfig& cfg, std::ostream& log);
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& log);
// Builds the CSV without touching the filesystem.
std::string sweep_csv(const ExperimentConfig& cfg);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget = 0.0;
};

struct Suite {
    std::string name;
    std::string description;
    std::vector<int> criteria;
};

const std::vector<Suite>& suites();
// Runs criterion 1..12 and times it; runtime over budget fails the criterion.
CriterionResult run_criterion(int id);
std::string format_criterion(const CriterionResult& r);
// Unknown name: exit 2 with the list of suites.
int cmd_reproduce(const std::string& suite, std::ostream& log);

} // namespace heatfk
