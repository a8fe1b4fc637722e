#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "heatfk/error.hpp"
#include "heatfk/families.hpp"
#include "heatfk/harness.hpp"
#include "heatfk/io.hpp"
#include "heatfk/rng.hpp"
#include "heatfk/scalars.hpp"
#include "heatfk/spectral.hpp"
#include "heatfk/theorems.hpp"

namespace heatfk {

namespace {

std::string sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

// Graph, metric and full-mode semigroup kept together.
struct Host {
    std::string name;
    WeightedGraph g;
    IntrinsicMetric metric;
    std::unique_ptr<HeatSemigroup> hs;

    Host(std::string n, WeightedGraph graph, MetricRule rule = MetricRule::degree_path,
         SpectralMode mode = SpectralMode::full())
        : name(std::move(n)), g(std::move(graph)), metric(IntrinsicMetric::build(g, rule)),
          hs(std::make_unique<HeatSemigroup>(g, std::move(mode))) {}
    Host(const Host&) = delete;
};

std::vector<std::unique_ptr<Host>> catalogue_hosts() {
    std::vector<std::unique_ptr<Host>> out;
    for (const auto& spec : catalogue()) out.push_back(std::make_unique<Host>(spec.name, generate(spec.spec)));
    return out;
}

TheoremInputs inputs_for(const Host& h) {
    TheoremInputs in;
    in.g = &h.g;
    in.metric = &h.metric;
    in.hs = h.hs.get();
    return in;
}

// Distinct balls with at most max_size vertices, excluding the whole graph.
struct BallRef {
    Vertex x;
    double r;
    VertexSubset set;
};

std::vector<BallRef> distinct_balls(const Host& h, std::size_t max_size) {
    std::vector<BallRef> out;
    std::set<std::vector<Vertex>> seen;
    for (Vertex x = 0; x < h.g.size(); ++x)
        for (double r : ball_radii(h.metric, x)) {
            if (r <= 0) continue;
            VertexSubset B = ball(h.metric, x, r);
            if (B.size() > max_size) break;
            if (B.size() == h.g.size()) break;
            if (seen.insert(B.items()).second) out.push_back({x, r, std::move(B)});
        }
    return out;
}

std::string report_line(const Host& h, const PropertyReport& rep) {
    return h.name + " " + rep.check + ": min log margin " + sci(rep.min_log_margin());
}

void require_report(Outcome& out, const Host& h, const PropertyReport& rep, double& worst) {
    worst = std::min(worst, rep.min_log_margin());
    if (!rep.verdict()) out.fail(report_line(h, rep));
    if (!rep.certified()) out.fail(h.name + " " + rep.check + ": report not certified");
}

// 1: residuals of the elementary identities on random (u, ω).
Outcome criterion_identities() {
    Outcome out;
    const WeightedGraph g = generate(random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::counting));
    Lcg64 rng(20240601);
    std::vector<double> u(g.size()), om(g.size());
    double r1 = 0, r2 = 0, s3 = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 1000; ++s) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            u[i] = rng.uniform(0.0, 2.0);
            om[i] = rng.uniform(-3.0, 3.0);
        }
        const auto res = elementary_identities_check(g, u, om);
        r1 = std::max(r1, res.identity_i);
        r2 = std::max(r2, res.identity_ii);
        s3 = std::min(s3, res.slack_iii);
    }
    out.detail = "max residual (i) " + sci(r1) + ", (ii) " + sci(r2) + ", min slack (iii) " + sci(s3);
    if (!(r1 <= 1e-12 && r2 <= 1e-12 && s3 >= -1e-12)) out.passed = false;
    return out;
}

// 2: λ({o}) = Deg_o and domain monotonicity on nested subsets of small balls.
Outcome criterion_eigen() {
    Outcome out;
    double worst_single = 0.0;
    for (int k = 0; k < 100; ++k) {
        const MeasureKind kind = k % 2 ? MeasureKind::normalizing : MeasureKind::counting;
        const WeightedGraph g = generate(random_spec(8 + k % 17, 0.3, 0.5, 2.0, 1000 + k, kind));
        for (Vertex o = 0; o < g.size(); ++o) {
            const double lam = dirichlet_lambda(g, VertexSubset({o}));
            const double err = std::abs(lam - g.Deg(o)) / std::max(1.0, g.Deg(o));
            worst_single = std::max(worst_single, err);
        }
    }
    if (!(worst_single <= 1e-10)) out.fail("lambda({o}) differs from Deg_o by " + sci(worst_single));
    double worst_mono = 0.0;
    std::size_t pairs = 0;
    for (auto kind : {MeasureKind::counting, MeasureKind::normalizing})
        for (const FamilySpec& spec : {complete_spec(10, kind), path_spec(9, kind)}) {
            Host h(spec.name(), generate(spec));
            std::set<std::vector<Vertex>> seen;
            for (Vertex x = 0; x < h.g.size(); ++x)
                for (double r : ball_radii(h.metric, x)) {
                    const VertexSubset B = ball(h.metric, x, r);
                    if (B.size() > 12 || !seen.insert(B.items()).second) continue;
                    const std::size_t k = B.size();
                    std::vector<double> lam(std::size_t(1) << k, 0.0);
                    for (std::uint32_t mask = 1; mask < lam.size(); ++mask) {
                        std::vector<Vertex> items;
                        for (std::size_t i = 0; i < k; ++i)
                            if (mask >> i & 1u) items.push_back(B[i]);
                        lam[mask] = dirichlet_lambda(h.g, VertexSubset(std::move(items)));
                    }
                    for (std::uint32_t V = 1; V < lam.size(); ++V)
                        for (std::uint32_t U = (V - 1) & V; U; U = (U - 1) & V) {
                            ++pairs;
                            worst_mono = std::max(worst_mono, (lam[V] - lam[U]) / std::max(1.0, lam[V]));
                        }
                }
        }
    if (!(worst_mono <= 1e-12)) out.fail("domain monotonicity violated by " + sci(worst_mono));
    if (out.passed)
        out.detail = "max |lambda({o}) - Deg_o| " + sci(worst_single) + "; " + std::to_string(pairs) +
                     " nested pairs, worst excess " + sci(worst_mono);
    return out;
}

// 3: symmetry, mass, semigroup, E_0 and the RK4 cross-check on the catalogue.
Outcome criterion_heat() {
    Outcome out;
    double sym = 0, mass = 0, semi = 0, e0 = 0, ode = 0;
    for (const auto& hp : catalogue_hosts()) {
        const Host& h = *hp;
        const std::size_t N = h.g.size();
        for (double t : {0.1, 1.0, 5.0}) {
            const Matrix P = h.hs->kernel_matrix(t);
            const Matrix Q = h.hs->kernel_matrix(2.0 * t);
            for (Vertex x = 0; x < N; ++x) {
                double row = 0.0;
                for (Vertex y = 0; y < N; ++y) {
                    row += P(x, y) * h.g.m(y);
                    sym = std::max(sym, std::abs(P(x, y) - P(y, x)) / std::max(P(x, y), P(y, x)));
                    double conv = 0.0;
                    for (Vertex z = 0; z < N; ++z) conv += P(x, z) * P(z, y) * h.g.m(z);
                    semi = std::max(semi, std::abs(conv - Q(x, y)) / Q(x, y));
                }
                mass = std::max(mass, std::abs(row - 1.0));
                const double E = weighted_norm_E(*h.hs, h.metric, x, t, 0.0);
                e0 = std::max(e0, std::abs(E - Q(x, x)) / Q(x, x));
            }
            for (Vertex x : {Vertex(0), Vertex(N / 2)}) {
                const auto col = ode_crosscheck(h.g, t, x, ode_default_steps(h.g, t));
                const auto ref = h.hs->kernel_column(t, x);
                double scale = 0.0;
                for (double v : ref) scale = std::max(scale, v);
                for (Vertex y = 0; y < N; ++y) ode = std::max(ode, std::abs(col[y] - ref[y]) / scale);
            }
        }
    }
    out.detail = "symmetry " + sci(sym) + ", mass " + sci(mass) + ", semigroup " + sci(semi) + ", E_0 " + sci(e0) +
                 ", spectral vs RK4 " + sci(ode);
    if (!(sym <= 1e-10)) out.fail("symmetry defect " + sci(sym));
    if (!(mass <= 1e-10)) out.fail("mass defect " + sci(mass));
    if (!(semi <= 1e-9)) out.fail("semigroup defect " + sci(semi));
    if (!(e0 <= 1e-10)) out.fail("E_0 defect " + sci(e0));
    if (!(ode <= 1e-6)) out.fail("RK4 cross-check defect " + sci(ode));
    return out;
}

// 4: eikonal inequality for the three weight families, monotonicity of Ξ in
// both spectral modes, and the broken field as a negative control.
Outcome criterion_eikonal() {
    Outcome out;
    const double T = 2.0;
    std::vector<double> times;
    for (int k = 0; k <= 20; ++k) times.push_back(T * k / 20.0);
    const OmegaKind kinds[3] = {OmegaKind::forward, OmegaKind::backward, OmegaKind::centered};
    const double etas[4] = {0.0, 0.5, 1.0, 2.0};
    double worst_eik = std::numeric_limits<double>::infinity(), worst_xi = -std::numeric_limits<double>::infinity();
    std::size_t controls = 0;
    for (const auto& spec : catalogue()) {
        Host h(spec.name, generate(spec.spec));
        const std::size_t N = h.g.size();
        std::vector<Vertex> host_items;
        for (Vertex v = 0; v + 1 < N; ++v) host_items.push_back(v);
        const HeatSemigroup killed(h.g, SpectralMode::dirichlet_host(VertexSubset(host_items)));
        for (Vertex o : {Vertex(0), Vertex(N / 2)})
            for (double R : {0.0, 1.0})
                for (OmegaKind k : kinds)
                    for (double eta : etas) {
                        const OmegaField w = make_omega(k, o, R, T, eta, h.metric);
                        const auto eik = check_eikonal(h.g, w, times);
                        worst_eik = std::min(worst_eik, eik.min_margin);
                        if (!eik.holds(1e-12))
                            out.fail(spec.name + ": eikonal margin " + sci(eik.min_margin) + " at x = " +
                                     std::to_string(eik.witness_x));
                        if (R != 1.0) continue;
                        std::vector<double> u0(N, 0.0);
                        u0[o] = 1.0 / h.g.m(o);
                        for (const HeatSemigroup* hs : std::initializer_list<const HeatSemigroup*>{h.hs.get(), &killed}) {
                            const auto xi = xi_monitor(*hs, w, u0, hs->bottom(), times, 1e-9);
                            worst_xi = std::max(worst_xi, xi.worst_log_ratio);
                            if (!xi.nonincreasing)
                                out.fail(spec.name + ": Xi increases by log ratio " + sci(xi.worst_log_ratio));
                        }
                    }
        const OmegaField w = broken_omega(make_omega(OmegaKind::centered, 0, 0.0, T, 1.0, h.metric));
        if (check_eikonal(h.g, w, times).holds(1e-12))
            out.fail(spec.name + ": broken field passes the eikonal check");
        else
            ++controls;
    }
    if (out.passed)
        out.detail = "min eikonal margin " + sci(worst_eik) + ", max log Xi step " + sci(worst_xi) + ", " +
                     std::to_string(controls) + " negative controls fail as expected";
    return out;
}

// 5: split bound and the weighted-norm bound on every catalogue graph.
Outcome criterion_split() {
    Outcome out;
    const auto ts = geometric_grid(0.25, 32.0, 1.2);
    double worst = std::numeric_limits<double>::infinity();
    std::size_t points = 0;
    for (const auto& hp : catalogue_hosts()) {
        TheoremInputs in = inputs_for(*hp);
        in.t = ts;
        const PropertyReport split = check_split(in);
        require_report(out, *hp, split, worst);
        in.r = {0.0, 1.0, 2.0};
        in.eta = {0.0, 0.5, 1.0, 2.0};
        const PropertyReport kappa = check_kappa_bound(in);
        require_report(out, *hp, kappa, worst);
        points += split.grid.size() + kappa.grid.size();
    }
    if (out.passed) out.detail = std::to_string(points) + " points, min log margin " + sci(worst);
    return out;
}

// 6: heuristic FK never undercuts the exact constant, which is attained.
Outcome criterion_fk() {
    Outcome out;
    const double n = 2.0;
    std::size_t balls = 0;
    double worst_gap = std::numeric_limits<double>::infinity(), worst_eq = 0.0, worst_pred = 0.0;
    FkOptions fo;
    fo.cap = 14;
    for (const auto& hp : catalogue_hosts()) {
        const Host& h = *hp;
        Lcg64 rng(77);
        for (const BallRef& b : distinct_balls(h, 14)) {
            ++balls;
            const FKEstimate ex = fk_constant_exact(h.g, h.metric, b.x, b.r, n, fo);
            const FKEstimate he = fk_constant_heuristic(h.g, h.metric, b.x, b.r, n, fo);
            worst_gap = std::min(worst_gap, he.a - ex.a);
            if (he.a < ex.a - 1e-12) out.fail(h.name + ": heuristic a below exact a at x = " + std::to_string(b.x));
            const double mB = ex.ball_measure;
            auto value = [&](const VertexSubset& U, double lam) {
                double mU = 0.0;
                for (Vertex v : U) mU += h.g.m(v);
                return lam * b.r * b.r * std::pow(mU / mB, 2.0 / n);
            };
            const double at_witness = value(ex.witness, dirichlet_lambda(h.g, ex.witness));
            const double eq = std::abs(at_witness - ex.a) / ex.a;
            worst_eq = std::max(worst_eq, eq);
            if (eq > 1e-10) out.fail(h.name + ": witness misses a by " + sci(eq));
            // Arbitrary subsets, connected or not.
            for (int s = 0; s < 32; ++s) {
                std::vector<Vertex> items;
                for (Vertex v : b.set)
                    if (rng.uniform() < 0.5) items.push_back(v);
                if (items.empty()) items.push_back(b.set[rng.below(b.set.size())]);
                const VertexSubset U(std::move(items));
                const double v = value(U, dirichlet_lambda(h.g, U));
                const double def = (ex.a - v) / ex.a;
                worst_pred = std::max(worst_pred, def);
                if (def > 1e-10) out.fail(h.name + ": FK predicate fails on a sampled subset by " + sci(def));
            }
        }
    }
    if (out.passed)
        out.detail = std::to_string(balls) + " balls, min heuristic - exact " + sci(worst_gap) + ", witness error " +
                     sci(worst_eq) + ", worst predicate defect " + sci(worst_pred);
    return out;
}

// 7: FK on certified balls gives (L) and (V) with the stated constants.
Outcome criterion_fk_consequences() {
    Outcome out;
    double worst = std::numeric_limits<double>::infinity();
    std::size_t points = 0;
    for (const auto& hp : catalogue_hosts()) {
        const Host& h = *hp;
        const double S = h.metric.jump_size();
        for (Vertex o = 0; o < h.g.size(); ++o) {
            std::vector<double> Rs;
            for (double d : ball_radii(h.metric, o)) {
                if (d < 2.0 * S) continue;
                const std::size_t k = ball_size(h.metric, o, d);
                if (k > 12 || k == h.g.size()) break;
                Rs.push_back(d);
            }
            if (Rs.empty()) continue;
            TheoremInputs in = inputs_for(h);
            in.n = 2.0;
            in.xs = {o};
            in.r = Rs;
            const PropertyReport L = check_localreg_from_fk(in);
            const PropertyReport V = check_doubling_from_fk(in);
            require_report(out, h, L, worst);
            require_report(out, h, V, worst);
            points += L.grid.size() + V.grid.size();
        }
    }
    if (points == 0) out.fail("no certified balls");
    if (out.passed) out.detail = std::to_string(points) + " points, min log margin " + sci(worst);
    return out;
}

// 8: mean value inequality on dense hosts in Dirichlet-host mode.
Outcome criterion_mean_value() {
    Outcome out;
    double worst = std::numeric_limits<double>::infinity();
    std::size_t points = 0;
    for (const FamilySpec& spec : {complete_spec(10, MeasureKind::counting), star_spec(16, MeasureKind::counting)}) {
        WeightedGraph g = generate(spec);
        std::vector<Vertex> host;
        for (Vertex v = 0; v + 1 < g.size(); ++v) host.push_back(v);
        Host h(spec.name(), std::move(g), MetricRule::degree_path, SpectralMode::dirichlet_host(VertexSubset(host)));
        TheoremInputs in = inputs_for(h);
        in.n = 2.0;
        in.R = 288.0 * h.metric.jump_size();
        in.t = {0.25, 1.0, 4.0, 16.0};
        const PropertyReport rep = check_mv(in);
        require_report(out, h, rep, worst);
        points += rep.grid.size();
    }
    if (out.passed) out.detail = std::to_string(points) + " points, min log margin " + sci(worst);
    return out;
}

Vertex box_center(int side) { return Vertex(side / 2) * Vertex(side + 1) + Vertex(side / 2); }

// 9: ball comparison, the a priori FK bound and reverse doubling on Z¹, Z² boxes.
Outcome criterion_chain() {
    Outcome out;
    double worst = std::numeric_limits<double>::infinity();
    std::size_t points = 0;
    auto run = [&](const Host& h, const PropertyReport& rep) {
        require_report(out, h, rep, worst);
        points += rep.grid.size();
    };
    {
        Host z1("P_129/normalizing", generate(path_spec(129, MeasureKind::normalizing)));
        TheoremInputs in = inputs_for(z1);
        in.n = 1.0;
        in.xs = {64};
        in.r = {8.0, 16.0, 32.0, 64.0};
        run(z1, check_ball_comparison(in));
        in.r_hat = 4.0;
        in.r = {32.0, 64.0};
        run(z1, check_reverse_doubling(in));
        in.r = {16.0};
        in.subsets = 200;
        run(z1, check_fk_apriori(in));
    }
    {
        Host z2("box_2_40/normalizing", generate(box_spec(2, 40, MeasureKind::normalizing)));
        TheoremInputs in = inputs_for(z2);
        in.n = 2.0;
        in.xs = {box_center(40)};
        in.r = {8.0, 16.0, 32.0};
        run(z2, check_ball_comparison(in));
        in.r_hat = 4.0;
        in.r = {32.0, 40.0};
        run(z2, check_reverse_doubling(in));
    }
    {
        Host z2("box_2_16/normalizing", generate(box_spec(2, 16, MeasureKind::normalizing)));
        TheoremInputs in = inputs_for(z2);
        in.n = 2.0;
        in.xs = {box_center(16)};
        in.r = {8.0};
        in.r_hat = 2.0;
        in.subsets = 200;
        run(z2, check_fk_apriori(in));
    }
    if (out.passed) out.detail = std::to_string(points) + " points, min log margin " + sci(worst);
    return out;
}

// 10: ζ against its Gaussian limit and the two polynomial corrections.
Outcome criterion_zeta() {
    Outcome out;
    const double ratio = 2.0 * 100.0 * zeta(1.0, 100.0, 1.0);
    if (!(std::abs(ratio - 1.0) <= 1e-4)) out.fail("2t zeta / r^2 = " + sci(ratio));
    double worst = 0.0;
    for (double S : {0.1, 0.5, 1.0, 2.0})
        for (double t : geometric_grid(0.01, 1000.0, 1.5))
            for (double rho : geometric_grid(0.01, 1000.0, 1.5)) {
                const double q = poly_correction(rho, t, S) / kr_poly_correction(rho, t, S);
                worst = std::max(worst, q);
            }
    if (!(worst <= 2.0)) out.fail("arsinh correction exceeds twice the other by ratio " + sci(worst));
    if (out.passed) out.detail = "2t zeta / r^2 - 1 = " + sci(ratio - 1.0) + ", max correction ratio " + sci(worst);
    return out;
}

// 11: stability of the Gaussian envelope on Z with m = deg.
Outcome criterion_davies_pang() {
    Outcome out;
    Host h("P_201/normalizing", generate(path_spec(201, MeasureKind::normalizing)));
    const Vertex o = 100;
    const double S = h.metric.jump_size(), n = 1.0;
    std::map<double, double> C;
    for (double t : {64.0, 256.0}) {
        const auto col = h.hs->kernel_column(t, o);
        const double s = std::sqrt(t);
        double best = 0.0;
        for (Vertex y = 80; y <= 120; ++y) {
            const double rho = h.metric(o, y);
            const double v = col[y] *
                             std::sqrt(ball_volume(h.g, h.metric, o, s) * ball_volume(h.g, h.metric, y, s)) *
                             std::exp(zeta(rho, t, S)) / std::pow(poly_correction(rho, t, S), 0.5 * n);
            best = std::max(best, v);
        }
        C[t] = best;
    }
    const double var = std::abs(C[256.0] / C[64.0] - 1.0);
    out.detail = "C*(64) = " + sci(C[64.0]) + ", C*(256) = " + sci(C[256.0]) + ", variation " + sci(var);
    if (!std::isfinite(C[64.0]) || !std::isfinite(C[256.0]) || !(C[64.0] > 0)) out.fail("C* not finite");
    if (!(var < 0.2)) out.passed = false;
    return out;
}

// 12: byte-identical sweeps and graph JSON round trips.
Outcome criterion_determinism() {
    Outcome out;
    ExperimentConfig cfg;
    cfg.family = "C_8";
    cfg.checks = {"split", "L", "FK", "kappa_bound"};
    cfg.grid_t = {0.5, 2.0};
    cfg.grid_r = {0.5, 1.0, 2.0};
    cfg.params["n"] = 1.0;
    cfg.params["a"] = 0.01;
    cfg.out_dir = (std::filesystem::temp_directory_path() / "heatfk_determinism").string();
    std::string first, second;
    std::ostringstream sink;
    for (std::string* dst : {&first, &second}) {
        const int code = cmd_sweep(cfg, sink);
        if (code == 2) out.fail("sweep failed: " + sink.str());
        *dst = read_file(output_dir(cfg) + "/margins.csv");
    }
    if (first != second) out.fail("sweep CSV differs between runs");
    if (sweep_csv(cfg) != first) out.fail("in-memory sweep differs from the file");
    std::size_t graphs = 0;
    for (const auto& spec : catalogue()) {
        const WeightedGraph g = generate(spec.spec);
        const std::string text = dump_graph(g);
        const WeightedGraph back = parse_graph(text);
        if (!(back == g) || dump_graph(back) != text) out.fail(spec.name + ": JSON round trip differs");
        ++graphs;
    }
    if (out.passed)
        out.detail = std::to_string(std::count(first.begin(), first.end(), '\n') - 1) + " CSV rows identical, " +
                     std::to_string(graphs) + " graphs round-trip";
    return out;
}

struct CriterionDef {
    int id;
    const char* name;
    double budget;
    Outcome (*run)();
};

const std::vector<CriterionDef>& criteria() {
    static const std::vector<CriterionDef> defs{
        {1, "identities", 5, criterion_identities},
        {2, "eigenvalue oracle", 10, criterion_eigen},
        {3, "heat kernel sanity", 30, criterion_heat},
        {4, "eikonal and Xi", 60, criterion_eikonal},
        {5, "unconditional kernel bounds", 60, criterion_split},
        {6, "FK exact/heuristic", 60, criterion_fk},
        {7, "FK implies L and V", 30, criterion_fk_consequences},
        {8, "mean value inequality", 120, criterion_mean_value},
        {9, "ball comparison chain", 60, criterion_chain},
        {10, "zeta asymptotics", 1, criterion_zeta},
        {11, "Gaussian envelope trend", 60, criterion_davies_pang},
        {12, "determinism", 10, criterion_determinism},
    };
    return defs;
}

} // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> list{
        {"identities", "elementary identities on random functions", {1}},
        {"eigen", "Dirichlet eigenvalue oracles", {2}},
        {"heat", "heat kernel sanity on the catalogue", {3}},
        {"eikonal", "eikonal inequality and Xi monotonicity", {4}},
        {"split", "split bound and weighted-norm bound", {5}},
        {"fk", "exact versus heuristic FK constants", {6}},
        {"fk_consequences", "FK implies local regularity and doubling", {7}},
        {"mean_value", "mean value inequality on dense hosts", {8}},
        {"chain", "ball comparison, a priori FK, reverse doubling", {9}},
        {"zeta", "zeta asymptotics and polynomial corrections", {10}},
        {"davies_pang", "Gaussian envelope stability on Z", {11}},
        {"determinism", "byte-identical sweeps and JSON round trips", {12}},
        {"all", "every acceptance criterion", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
    };
    return list;
}

CriterionResult run_criterion(int id) {
    const auto& defs = criteria();
    auto it = std::find_if(defs.begin(), defs.end(), [&](const CriterionDef& d) { return d.id == id; });
    if (it == defs.end()) throw DomainError("unknown criterion " + std::to_string(id));
    CriterionResult res;
    res.id = id;
    res.name = it->name;
    res.budget = it->budget;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = it->run();
        res.passed = o.passed;
        res.detail = o.detail;
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.seconds > res.budget) {
        res.detail += (res.detail.empty() ? "" : "; ") + std::string("runtime over budget");
        res.passed = false;
    }
    return res;
}

std::string format_criterion(const CriterionResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "%-4s criterion %2d  %-28s %7.2fs / %4.0fs  ", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds, r.budget);
    return head + r.detail;
}

int cmd_reproduce(const std::string& suite, std::ostream& log) {
    const auto& list = suites();
    auto it = std::find_if(list.begin(), list.end(), [&](const Suite& s) { return s.name == suite; });
    if (it == list.end()) {
        log << "unknown suite '" << suite << "'; available:";
        for (const auto& s : list) log << " " << s.name;
        log << "\n";
        return 2;
    }
    bool all = true;
    for (int id : it->criteria) {
        const CriterionResult r = run_criterion(id);
        log << format_criterion(r) << "\n" << std::flush;
        all = all && r.passed;
    }
    log << (all ? "suite " + suite + ": pass\n" : "suite " + suite + ": FAIL\n");
    return all ? 0 : 1;
}

} // namespace heatfk
