#include "heatfk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <ostream>
#include <set>

#include "heatfk/bounds.hpp"
#include "heatfk/error.hpp"
#include "heatfk/rng.hpp"
#include "heatfk/spectral.hpp"
#include "heatfk/theorems.hpp"

namespace heatfk {

namespace {

const std::vector<std::string> kExtraChecks{"identities", "eikonal", "eikonal_broken", "xi"};
const std::vector<std::string> kPropertyChecks{"FK", "G", "VD", "L", "O"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

// Grids each check reads.
bool needs_t(const std::string& c) {
    static const std::set<std::string> s{"G", "O", "split", "upper_general", "gaussian_clean", "mv",
                                         "elementary_point", "elementary_step", "kappa_bound", "integrated_heat",
                                         "eikonal", "eikonal_broken", "xi"};
    return s.count(c) > 0;
}

bool needs_r(const std::string& c) {
    static const std::set<std::string> s{"FK", "VD", "L", "ball_comparison", "fk_apriori", "reverse_doubling",
                                         "choice_gamma", "kappa_bound", "localreg_from_fk", "doubling_from_fk",
                                         "eikonal", "eikonal_broken", "xi"};
    return s.count(c) > 0;
}

double param(const ExperimentConfig& cfg, const std::string& key, double fallback) {
    auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
}

std::vector<Vertex> all_or(const std::vector<Vertex>& given, const HeatSemigroup& hs) {
    return given.empty() ? hs.host().items() : given;
}

std::vector<double> eta_grid(const ExperimentConfig& cfg) {
    return cfg.grid_eta.empty() ? std::vector<double>{0.0, 0.5, 1.0, 2.0} : cfg.grid_eta;
}

PropertyReport run_identities(const ExperimentConfig& cfg, const Workspace& ws) {
    PropertyReport rep;
    rep.check = "identities";
    rep.tol = cfg.tol;
    const auto samples = static_cast<std::size_t>(param(cfg, "subsets", 200));
    const auto seed = static_cast<std::uint64_t>(param(cfg, "seed", 1));
    rep.add_param("samples", double(samples));
    rep.add_param("seed", double(seed));
    Lcg64 rng(seed);
    const std::size_t N = ws.g.size();
    std::vector<double> u(N), om(N);
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < N; ++i) {
            u[i] = rng.uniform(0.0, 2.0);
            om[i] = rng.uniform(-3.0, 3.0);
        }
        const auto res = elementary_identities_check(ws.g, u, om);
        rep.add_point({{"sample", double(s)}, {"identity", 1}}, 1.0, 1.0 - res.identity_i);
        rep.add_point({{"sample", double(s)}, {"identity", 2}}, 1.0, 1.0 - res.identity_ii);
        rep.add_point({{"sample", double(s)}, {"identity", 3}}, 1.0, 1.0 + res.slack_iii);
    }
    return rep;
}

const OmegaKind kKinds[3] = {OmegaKind::forward, OmegaKind::backward, OmegaKind::centered};

PropertyReport run_eikonal(const ExperimentConfig& cfg, const Workspace& ws, bool broken) {
    PropertyReport rep;
    rep.check = broken ? "eikonal_broken" : "eikonal";
    rep.tol = cfg.tol;
    const double R = cfg.grid_r.front();
    const double T = *std::max_element(cfg.grid_t.begin(), cfg.grid_t.end());
    rep.add_param("R", R);
    rep.add_param("T", T);
    for (Vertex o : all_or(cfg.xs, *ws.hs))
        for (OmegaKind k : kKinds)
            for (double eta : eta_grid(cfg)) {
                OmegaField w = make_omega(k, o, R, T, eta, ws.metric);
                if (broken) w = broken_omega(w);
                const auto res = check_eikonal(ws.g, w, cfg.grid_t);
                rep.add_point({{"o", double(o)},
                               {"kind", double(static_cast<int>(k))},
                               {"eta", eta},
                               {"x", double(res.witness_x)},
                               {"t", res.witness_t}},
                              1.0, 1.0 + res.min_margin);
            }
    return rep;
}

PropertyReport run_xi(const ExperimentConfig& cfg, const Workspace& ws) {
    PropertyReport rep;
    rep.check = "xi";
    rep.tol = cfg.tol;
    const double R = cfg.grid_r.front();
    std::vector<double> times = cfg.grid_t;
    std::sort(times.begin(), times.end());
    const double T = times.back();
    const double Lambda = ws.hs->bottom();
    rep.add_param("R", R);
    rep.add_param("T", T);
    rep.add_param("Lambda", Lambda);
    for (Vertex o : all_or(cfg.xs, *ws.hs)) {
        std::vector<double> u0(ws.g.size(), 0.0);
        u0[o] = 1.0 / ws.g.m(o);
        for (OmegaKind k : kKinds)
            for (double eta : eta_grid(cfg)) {
                const OmegaField w = make_omega(k, o, R, T, eta, ws.metric);
                const auto res = xi_monitor(*ws.hs, w, u0, Lambda, times, cfg.tol);
                for (std::size_t i = 0; i + 1 < res.log_xi.size(); ++i)
                    rep.add_point_log({{"o", double(o)}, {"kind", double(static_cast<int>(k))}, {"eta", eta},
                                       {"t", times[i + 1]}},
                                      res.log_xi[i + 1], res.log_xi[i]);
            }
    }
    return rep;
}

PropertyReport run_property(const ExperimentConfig& cfg, const Workspace& ws, const std::string& check) {
    BoundParams p = BoundParams::from(ws.g, ws.metric, *ws.hs);
    p.a = param(cfg, "a", 1.0);
    p.n = param(cfg, "n", 1.0);
    p.R1 = param(cfg, "R1", 0.0);
    p.R2 = param(cfg, "R2", std::numeric_limits<double>::infinity());
    p.C = param(cfg, "C", 1.0);
    if (!cfg.profile.empty()) p.profile = profile_from_string(cfg.profile);
    p.validate();
    PropertyGrid grid;
    grid.xs = all_or(cfg.xs, *ws.hs);
    grid.ys = cfg.ys;
    grid.t = cfg.grid_t;
    grid.r = cfg.grid_r;
    CheckOptions opt;
    opt.tol = cfg.tol;
    opt.cap = cfg.cap;
    return check_property(ws.g, ws.metric, *ws.hs, property_from_string(check), p, grid, opt);
}

PropertyReport run_theorem(const ExperimentConfig& cfg, const Workspace& ws, const std::string& check) {
    TheoremInputs in;
    in.g = &ws.g;
    in.metric = &ws.metric;
    in.hs = &*ws.hs;
    in.xs = cfg.xs;
    in.ys = cfg.ys;
    in.t = cfg.grid_t;
    in.r = cfg.grid_r;
    in.eta = eta_grid(cfg);
    in.n = param(cfg, "n", 1.0);
    in.n_prime = param(cfg, "n_prime", 0.0);
    in.R = param(cfg, "R", 0.0);
    in.R1 = param(cfg, "R1", 0.0);
    in.R2 = param(cfg, "R2", 0.0);
    in.r_hat = param(cfg, "r_hat", 0.0);
    in.r1 = param(cfg, "r1", 0.0);
    in.r2 = param(cfg, "r2", 0.0);
    in.t1 = param(cfg, "t1", 0.0);
    in.t2 = param(cfg, "t2", 0.0);
    in.t0 = param(cfg, "t0", std::numeric_limits<double>::infinity());
    in.C = param(cfg, "C", 1.0);
    if (cfg.params.count("delta")) in.delta = {cfg.params.at("delta")};
    in.subsets = static_cast<std::size_t>(param(cfg, "subsets", 200));
    in.seed = static_cast<std::uint64_t>(param(cfg, "seed", 1));
    in.quad_panels = static_cast<std::size_t>(param(cfg, "quad_panels", 64));
    in.tol = cfg.tol;
    in.cap = cfg.cap;
    return theorem_check(check, in);
}

std::string now_utc() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct Outcome {
    std::vector<PropertyReport> reports;
    int exit_code = 0;
};

// Runs every check; hypothesis failures become stub reports and exit 2.
Outcome run_all(const ExperimentConfig& cfg, const Workspace& ws, std::ostream& log) {
    Outcome out;
    for (const auto& check : cfg.checks) {
        try {
            PropertyReport rep = run_check(cfg, ws, check);
            const bool gate = rep.certified();
            const bool ok = rep.verdict();
            log << check << ": " << (ok ? "pass" : "FAIL") << (gate ? "" : " (not certified, no hard gate)")
                << ", min log margin " << format_number(rep.min_log_margin()) << ", " << rep.grid.size()
                << " points\n";
            if (gate && !ok) out.exit_code = std::max(out.exit_code, 1);
            out.reports.push_back(std::move(rep));
        } catch (const HypothesisError& e) {
            PropertyReport rep;
            rep.check = check;
            rep.tol = cfg.tol;
            for (const auto& c : e.failed_clauses()) rep.audit(c, false);
            log << check << ": hypotheses not met: " << e.what() << "\n";
            out.exit_code = 2;
            out.reports.push_back(std::move(rep));
        }
    }
    return out;
}

int guarded(std::ostream& log, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << "\n";
    } catch (const SchemaError& e) {
        log << "config error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        log << "config error: " << e.what() << "\n";
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
    }
    return 2;
}

} // namespace

std::vector<std::string> known_checks() {
    std::vector<std::string> out = kPropertyChecks;
    for (const auto& t : theorem_names()) out.push_back(t);
    for (const auto& e : kExtraChecks) out.push_back(e);
    return out;
}

bool is_known_check(const std::string& name) { return contains(known_checks(), name); }

void ExperimentConfig::validate() const {
    if (graph_file.empty() && family.empty()) throw ConfigError("no graph: give --graph or --family");
    if (checks.empty()) throw ConfigError("no checks requested");
    for (const auto& c : checks) {
        if (!is_known_check(c)) throw ConfigError("unknown check '" + c + "'");
        if (needs_t(c) && grid_t.empty()) throw ConfigError("check '" + c + "' needs a nonempty t grid");
        if (needs_r(c) && grid_r.empty()) throw ConfigError("check '" + c + "' needs a nonempty r grid");
    }
    if (!(tol > 0)) throw ConfigError("tolerance must be positive");
    for (double t : grid_t)
        if (!std::isfinite(t)) throw ConfigError("t grid values must be finite");
    for (double r : grid_r)
        if (!std::isfinite(r)) throw ConfigError("r grid values must be finite");
}

Json ExperimentConfig::to_json() const {
    Json j;
    j["graph_file"] = graph_file;
    j["family"] = family;
    j["measure"] = to_string(measure);
    j["metric"] = to_string(metric);
    j["checks"] = checks;
    Json t = Json::array(), r = Json::array(), e = Json::array();
    for (double v : grid_t) t.push_back(number_json(v));
    for (double v : grid_r) r.push_back(number_json(v));
    for (double v : grid_eta) e.push_back(number_json(v));
    j["grid_t"] = t;
    j["grid_r"] = r;
    j["grid_eta"] = e;
    j["xs"] = xs;
    j["ys"] = ys;
    j["killed"] = killed;
    Json p = Json::object();
    for (const auto& [k, v] : params) p[k] = number_json(v);
    j["params"] = p;
    j["profile"] = profile;
    j["tol"] = number_json(tol);
    j["cap"] = cap;
    return j;
}

std::string ExperimentConfig::hash() const { return hex64(fnv1a64(to_json().dump())); }

std::unique_ptr<Workspace> load_workspace(const ExperimentConfig& cfg) {
    auto ws = std::make_unique<Workspace>();
    if (!cfg.graph_file.empty()) {
        if (!std::filesystem::exists(cfg.graph_file)) throw ConfigError("graph file '" + cfg.graph_file + "' not found");
        ws->g = load_graph(cfg.graph_file);
        ws->graph_name = std::filesystem::path(cfg.graph_file).stem().string();
    } else {
        const FamilySpec spec = FamilySpec::parse(cfg.family, cfg.measure);
        ws->g = generate(spec);
        ws->graph_name = spec.name();
    }
    auto issues = validate(ws->g);
    if (!issues.empty()) throw ConfigError("graph fails validation: " + issues.front());
    auto check_vertex = [&](Vertex v) {
        if (v >= ws->g.size()) throw ConfigError("vertex " + std::to_string(v) + " out of range");
    };
    for (Vertex v : cfg.xs) check_vertex(v);
    for (Vertex v : cfg.ys) check_vertex(v);
    for (Vertex v : cfg.killed) check_vertex(v);
    ws->metric = IntrinsicMetric::build(ws->g, cfg.metric);
    SpectralMode mode = SpectralMode::full();
    if (!cfg.killed.empty()) {
        const VertexSubset K = VertexSubset::from_unsorted(cfg.killed);
        std::vector<Vertex> host;
        for (Vertex v = 0; v < ws->g.size(); ++v)
            if (!K.contains(v)) host.push_back(v);
        if (host.empty()) throw ConfigError("Dirichlet host is empty");
        mode = SpectralMode::dirichlet_host(VertexSubset(std::move(host)));
        for (Vertex v : cfg.xs)
            if (K.contains(v)) throw ConfigError("vertex " + std::to_string(v) + " lies outside the host");
    }
    ws->hs.emplace(ws->g, mode);
    return ws;
}

PropertyReport run_check(const ExperimentConfig& cfg, const Workspace& ws, const std::string& check) {
    PropertyReport rep;
    if (check == "identities")
        rep = run_identities(cfg, ws);
    else if (check == "eikonal" || check == "eikonal_broken")
        rep = run_eikonal(cfg, ws, check == "eikonal_broken");
    else if (check == "xi")
        rep = run_xi(cfg, ws);
    else if (contains(kPropertyChecks, check))
        rep = run_property(cfg, ws, check);
    else if (is_theorem(check))
        rep = run_theorem(cfg, ws, check);
    else
        throw ConfigError("unknown check '" + check + "'");
    rep.tol = cfg.tol;
    rep.add_param("graph", ws.graph_name);
    return rep;
}

std::string output_dir(const ExperimentConfig& cfg) {
    const char* env = std::getenv("HEATFK_OUT");
    const std::string dir = env && *env ? std::string(env) : cfg.out_dir;
    std::filesystem::create_directories(dir);
    return dir;
}

int cmd_check(const ExperimentConfig& cfg, std::ostream& log) {
    return guarded(log, [&] {
        cfg.validate();
        auto ws = load_workspace(cfg);
        Outcome res = run_all(cfg, *ws, log);
        const std::string dir = output_dir(cfg);
        const std::string hash = cfg.hash();
        Json summary;
        summary["config_hash"] = hash;
        summary["graph"] = ws->graph_name;
        summary["tolerance"] = number_json(cfg.tol);
        Json items = Json::array();
        for (const auto& rep : res.reports) {
            const std::string file = rep.check + ".json";
            write_file(dir + "/" + file, dump_report(rep, hash));
            Json item;
            item["check"] = rep.check;
            item["file"] = file;
            item["verdict"] = rep.verdict();
            item["certified"] = rep.certified();
            item["vacuous"] = rep.vacuous;
            item["min_log_margin"] = number_json(rep.min_log_margin());
            item["points"] = rep.grid.size();
            items.push_back(std::move(item));
        }
        summary["checks"] = std::move(items);
        summary["exit_code"] = res.exit_code;
        write_file(dir + "/summary.json", summary.dump(2) + "\n");
        Json meta;
        meta["config_hash"] = hash;
        meta["written_at"] = now_utc();
        write_file(dir + "/metadata.json", meta.dump(2) + "\n");
        return res.exit_code;
    });
}

std::string sweep_csv(const ExperimentConfig& cfg) {
    cfg.validate();
    auto ws = load_workspace(cfg);
    std::string csv = csv_header() + "\n";
    for (const auto& check : cfg.checks) {
        const PropertyReport rep = run_check(cfg, *ws, check);
        for (const auto& row : csv_rows(ws->graph_name, rep)) csv += row + "\n";
    }
    return csv;
}

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& log) {
    return guarded(log, [&] {
        cfg.validate();
        auto ws = load_workspace(cfg);
        Outcome res = run_all(cfg, *ws, log);
        std::string csv = csv_header() + "\n";
        std::size_t rows = 0;
        for (const auto& rep : res.reports)
            for (const auto& row : csv_rows(ws->graph_name, rep)) {
                csv += row + "\n";
                ++rows;
            }
        if (rows == 0 && res.exit_code != 2) throw ConfigError("the grid produced no points");
        const std::string dir = output_dir(cfg);
        write_file(dir + "/margins.csv", csv);
        Json meta;
        meta["config_hash"] = cfg.hash();
        meta["written_at"] = now_utc();
        meta["rows"] = rows;
        write_file(dir + "/metadata.json", meta.dump(2) + "\n");
        log << "wrote " << rows << " rows to " << dir << "/margins.csv\n";
        return res.exit_code;
    });
}

} // namespace heatfk
