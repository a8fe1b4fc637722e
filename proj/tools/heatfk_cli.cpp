#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heatfk/error.hpp"
#include "heatfk/harness.hpp"
#include "heatfk/heat.hpp"

using namespace heatfk;

namespace {

// "0.5,1,2" or "geom:lo:hi:ratio".
std::vector<double> parse_grid(const std::vector<std::string>& items) {
    std::vector<double> out;
    for (const auto& item : items) {
        if (item.rfind("geom:", 0) == 0) {
            std::vector<double> p;
            std::size_t pos = 5;
            while (pos <= item.size()) {
                const std::size_t next = item.find(':', pos);
                p.push_back(std::stod(item.substr(pos, next - pos)));
                if (next == std::string::npos) break;
                pos = next + 1;
            }
            if (p.size() != 3) throw ConfigError("geometric grid needs geom:lo:hi:ratio");
            for (double v : geometric_grid(p[0], p[1], p[2])) out.push_back(v);
            continue;
        }
        std::size_t pos = 0;
        while (pos <= item.size()) {
            const std::size_t next = item.find(',', pos);
            const std::string tok = item.substr(pos, next - pos);
            if (!tok.empty()) out.push_back(std::stod(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    return out;
}

struct Flags {
    std::string graph, family, measure = "counting", metric = "degree_path", out = "heatfk_out", profile;
    std::vector<std::string> checks, grid_t, grid_r, grid_eta, params;
    std::vector<std::size_t> xs, ys, killed;
    double tol = 1e-9;
    std::size_t cap = 16;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--graph", f.graph, "graph JSON file");
    sub->add_option("--family", f.family, "family spec, e.g. P_20, box:2:5, random:24:0.3:0.5:2:7");
    sub->add_option("--measure", f.measure, "counting | normalizing");
    sub->add_option("--metric", f.metric, "degree_path | combinatorial");
    sub->add_option("--check", f.checks, "check name (repeatable)");
    sub->add_option("--grid-t", f.grid_t, "t values: 0.5,1,2 or geom:lo:hi:ratio");
    sub->add_option("--grid-r", f.grid_r, "r values: 1,2,4 or geom:lo:hi:ratio");
    sub->add_option("--grid-eta", f.grid_eta, "eta values");
    sub->add_option("--x", f.xs, "center vertices by index");
    sub->add_option("--y", f.ys, "target vertices by index");
    sub->add_option("--kill", f.killed, "vertices removed from the Dirichlet host");
    sub->add_option("--param", f.params, "checker scalar key=value (n, a, R, R1, R2, r_hat, ...)");
    sub->add_option("--profile", f.profile, "uniform | counting | general");
    sub->add_option("--tol", f.tol, "relative tolerance");
    sub->add_option("--cap", f.cap, "FK enumeration cap");
    sub->add_option("--out", f.out, "output directory (HEATFK_OUT overrides)");
}

ExperimentConfig to_config(const Flags& f) {
    ExperimentConfig cfg;
    cfg.graph_file = f.graph;
    cfg.family = f.family;
    try {
        cfg.measure = measure_kind_from_string(f.measure);
        cfg.metric = metric_rule_from_string(f.metric);
        cfg.grid_t = parse_grid(f.grid_t);
        cfg.grid_r = parse_grid(f.grid_r);
        cfg.grid_eta = parse_grid(f.grid_eta);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    cfg.checks = f.checks;
    cfg.xs.assign(f.xs.begin(), f.xs.end());
    cfg.ys.assign(f.ys.begin(), f.ys.end());
    cfg.killed.assign(f.killed.begin(), f.killed.end());
    for (const auto& kv : f.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--param needs key=value, got '" + kv + "'");
        try {
            cfg.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw ConfigError("--param value is not a number: '" + kv + "'");
        }
    }
    cfg.profile = f.profile;
    cfg.tol = f.tol;
    cfg.cap = f.cap;
    cfg.out_dir = f.out;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heatfk: heat kernel and Faber-Krahn checks on weighted graphs"};
    app.require_subcommand(1);
    Flags f;
    std::string suite;
    auto* check = app.add_subcommand("check", "run checks and write one JSON report per check");
    auto* sweep = app.add_subcommand("sweep", "run checks and write a CSV of margins");
    auto* repro = app.add_subcommand("reproduce", "run a named acceptance suite");
    auto* list = app.add_subcommand("list", "list checks and suites");
    add_common(check, f);
    add_common(sweep, f);
    repro->add_option("--suite", suite, "suite name")->required();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (*list) {
        std::cout << "checks:";
        for (const auto& c : known_checks()) std::cout << " " << c;
        std::cout << "\nsuites:";
        for (const auto& s : suites()) std::cout << " " << s.name;
        std::cout << "\n";
        return 0;
    }
    if (*repro) return cmd_reproduce(suite, std::cout);
    ExperimentConfig cfg;
    try {
        cfg = to_config(f);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    if (*check) return cmd_check(cfg, std::cout);
    return cmd_sweep(cfg, std::cout);
}
