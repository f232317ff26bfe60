// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "app.hpp"

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "wightlab/errors.hpp"
#include "wightlab/schwinger_analytic.hpp"
#include "wightlab/schwinger_mc.hpp"
#include "wightlab/wightman_checks.hpp"

namespace wightlab::app {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"sample", "schwinger", "wightman", "laplace-check", "bounds",
                                                "certify", "krein", "cluster", "spectral"};
    return names;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json model_json(const ExperimentConfig& cfg) {
    json atoms = json::array();
    for (const auto& a : cfg.model.levy.atoms) atoms.push_back({{"jump", a.jump}, {"rate", a.rate}});
    return {{"kind", cfg.kind == ModelKind::Scalar ? "scalar" : "vector"},
            {"dim", cfg.model.green.dim},
            {"alpha", cfg.model.green.alpha},
            {"mass", cfg.model.green.m0},
            {"levy", {{"drift", cfg.model.levy.drift}, {"sigma2", cfg.model.levy.sigma2}, {"atoms", atoms}}}};
}

/// Collects output files; every run ends with a manifest next to them.
class Outputs {
  public:
    explicit Outputs(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

    std::ofstream open(const std::string& name) {
        files_.push_back(name);
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (dir_ / name).string());
        return f;
    }

    void write_json(const std::string& name, const json& j) { open(name) << j.dump(2) << "\n"; }

    const std::vector<std::string>& files() const { return files_; }
    const fs::path& dir() const { return dir_; }

  private:
    fs::path dir_;
    std::vector<std::string> files_;
};

struct TaskResult {
    bool ok = true;
    std::string message;
};

void require_scalar(const ExperimentConfig& cfg, const std::string& task) {
    if (cfg.kind != ModelKind::Scalar) throw ConfigError("model.kind: task " + task + " needs a scalar model");
}

std::vector<TestFunction> gaussians(const std::vector<SlotSpec>& slots) {
    std::vector<TestFunction> out;
    for (const auto& s : slots) out.push_back(s.gaussian());
    return out;
}

std::string subset_name(SubsetMask m) {
    std::string s;
    for (int i : elements_of(m)) s += (s.empty() ? "" : "-") + std::to_string(i);
    return s;
}

TaskResult task_sample(const ExperimentConfig& cfg, Outputs& out) {
    require_scalar(cfg, "sample");
    auto sec = task_section(cfg, "sample");
    McConfig mc{cfg.lattice, cfg.model, std::size_t(sec.integer("samples", 1000)),
                std::size_t(sec.integer("batches", int(kMinBatches))), cfg.seed, cfg.threads};
    auto phis = gaussians(sec.slots("test_functions"));
    auto est = estimate_schwinger(mc, phis);
    auto f = out.open("sample.csv");
    f << "subset,order,kind,mean_re,mean_im,std_error,samples\n";
    for (SubsetMask m = 1; m <= est.moments.full_mask(); ++m) {
        const int order = std::popcount(m);
        for (auto [kind, table] : {std::pair{"moment", &est.moments}, std::pair{"truncated", &est.truncated}}) {
            const auto& e = (*table)[m];
            f << subset_name(m) << "," << order << "," << kind << "," << num(e.mean.real()) << "," << num(e.mean.imag())
              << "," << num(e.std_error) << "," << e.n_samples << "\n";
        }
    }
    return {};
}

TaskResult task_schwinger(const ExperimentConfig& cfg, Outputs& out) {
    require_scalar(cfg, "schwinger");
    auto sec = task_section(cfg, "schwinger");
    McConfig mc{cfg.lattice, cfg.model, std::size_t(sec.integer("samples", 1000)),
                std::size_t(sec.integer("batches", int(kMinBatches))), cfg.seed, cfg.threads};
    const double band = sec.number("band", 0.0);
    auto phis = gaussians(sec.slots("test_functions"));
    auto est = estimate_schwinger(mc, phis);
    auto f = out.open("schwinger.csv");
    f << "subset,order,analytic,monte_carlo,std_error,abs_diff,within_3se_plus_band\n";
    TaskResult r;
    for (SubsetMask m = 1; m <= est.truncated.full_mask(); ++m) {
        if (std::popcount(m) < 2) continue;
        std::vector<TestFunction> sub;
        for (int i : elements_of(m)) sub.push_back(phis[i]);
        const double analytic = s_t_eval(sub, cfg.model, cfg.lattice);
        const auto& e = est.truncated[m];
        const double diff = std::abs(e.mean.real() - analytic);
        const bool ok = diff <= 3 * e.std_error + band;
        f << subset_name(m) << "," << std::popcount(m) << "," << num(analytic) << "," << num(e.mean.real()) << ","
          << num(e.std_error) << "," << num(diff) << "," << (ok ? 1 : 0) << "\n";
    }
    return r;
}

TaskResult task_wightman(const ExperimentConfig& cfg, Outputs& out) {
    auto sec = task_section(cfg, "wightman");
    auto family = sec.monomials("family");
    auto f = out.open("wightman.jsonl");
    TaskResult r;
    if (cfg.kind == ModelKind::Vector) {
        auto js = sec.numbers("j", std::vector<double>{0});
        for (const auto& m : family)
            for (double jd : js) {
                const int j = int(jd);
                auto e = m_n_j_eval(j, m.momentum(), cfg.sphere);
                json rec{{"label", m.label}, {"order", int(m.slots.size())}, {"j", j}, {"value", complex_json(e.value)},
                         {"error", e.error}, {"converged", e.converged}};
                f << rec.dump() << "\n";
            }
        return r;
    }
    for (const auto& m : family) {
        auto e = w_hat_trunc_scalar(m.momentum(), cfg.model, cfg.quad);
        json hist = json::array();
        for (auto h : e.history) hist.push_back(complex_json(h));
        json rec{{"label", m.label}, {"order", int(m.slots.size())}, {"value", complex_json(e.value)},
                 {"error", e.error}, {"converged", e.converged}, {"levels", hist}};
        f << rec.dump() << "\n";
    }
    return r;
}

TaskResult task_laplace(const ExperimentConfig& cfg, Outputs& out) {
    require_scalar(cfg, "laplace-check");
    auto sec = task_section(cfg, "laplace-check");
    auto sets = sec.point_sets("points");
    const double tol2 = sec.number("gap_tolerance_2", 1e-2), tol3 = sec.number("gap_tolerance_3", 5e-2);
    auto f = out.open("laplace.csv");
    f << "config,n,lattice_value,wightman_value,gap,pass\n";
    TaskResult r;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto b = laplace_bridge_check(cfg.model, sets[i], cfg.lattice, cfg.quad);
        const int n = int(sets[i].size());
        const bool ok = b.gap <= (n == 2 ? tol2 : tol3);
        if (!ok) r = {false, "Laplace gap above tolerance for config " + std::to_string(i)};
        f << i << "," << n << "," << num(b.lhs) << "," << num(b.rhs) << "," << num(b.gap) << "," << (ok ? 1 : 0) << "\n";
    }
    return r;
}

json sup_json(const DoubleSupEstimate& s) {
    return {{"value", s.value},         {"argmax", s.argmax},     {"history", s.history},
            {"half_width", s.half_width}, {"shell_max", s.shell_max}, {"stable", s.stable},
            {"ceiling", s.ceiling},     {"inner_c1", s.c1},       {"inner_c2", s.c2}};
}

TaskResult task_bounds(const ExperimentConfig& cfg, Outputs& out) {
    auto sec = task_section(cfg, "bounds");
    json j;
    TaskResult r;
    if (cfg.kind == ModelKind::Scalar) {
        auto orders = sec.numbers("orders", std::vector<double>{3, 4});
        const double gamma = sec.number("gamma", 0.25);
        int len = 2;
        for (double o : orders) len = std::max(len, int(o));
        auto table = scalar_bound_table(cfg.model, len, cfg.grid, gamma);
        json scalar{{"a", table.a}, {"higher_active", table.higher_active}};
        if (!table.higher_active) {
            // the factors are still reported for the model's exponent
            ScalarModel probe = cfg.model;
            probe.levy.atoms = {{1.0, 1.0}};
            table.factors = bound_integral_scalar(3, probe, cfg.grid, gamma);
        }
        scalar["spatial"] = table.factors.spatial;
        scalar["energy_sup"] = table.factors.energy_sup;
        scalar["third"] = table.factors.third;
        scalar["double_sup"] = sup_json(table.factors.double_sup);
        const auto& s = table.factors.double_sup;
        if (!(std::isfinite(s.value) && s.stable && s.value < s.ceiling))
            r = {false, "double sup not stable below its ceiling"};
        j["scalar"] = scalar;
    }
    auto vorders = sec.numbers("vector_orders", std::vector<double>{3});
    auto vs = shifted_singular_sup(cfg.grid);
    json vec{{"radial_1", radial_factor(1)},
             {"radial_2", radial_factor(2)},
             {"shifted_sup", {{"value", vs.value}, {"argmax", vs.argmax}, {"history", vs.history},
                              {"ceiling", vs.ceiling}, {"stable", vs.stable}}}};
    json cs = json::array();
    for (double nd : vorders) {
        const int n = int(nd);
        for (int jj = 0; jj <= n; ++jj) cs.push_back({{"n", n}, {"j", jj}, {"C", bound_integral_vector(n, jj, cfg.grid)}});
    }
    vec["constants"] = cs;
    j["vector"] = vec;
    out.write_json("bounds.json", j);
    return r;
}

TaskResult task_certify(const ExperimentConfig& cfg, Outputs& out) {
    require_scalar(cfg, "certify");
    auto sec = task_section(cfg, "certify");
    std::vector<BorchersMonomial> family;
    for (const auto& m : sec.monomials("family")) family.push_back(m.borchers());
    CertifySpec spec;
    spec.grid = cfg.grid;
    spec.quad = cfg.quad;
    spec.gamma = sec.number("gamma", 0.25);
    spec.pair_order = sec.integer("pair_order", 0);
    auto cert = hssc_certify(cfg.model, sec.integer("n_max", 4), family, spec);
    json j = certificate_json(cert);
    j["model"] = model_json(cfg);
    out.write_json("certificate.json", j);
    if (!cert.pass) return {false, "certificate failed: " + std::to_string(cert.witnesses.size()) + " witnesses"};
    return {};
}

TaskResult task_krein(const ExperimentConfig& cfg, Outputs& out) {
    auto sec = task_section(cfg, "krein");
    const int pairs = sec.integer("random_pairs", 50), max_dim = sec.integer("max_dim", 20);
    if (pairs < 0 || max_dim < 1) throw ConfigError("tasks.krein: random_pairs >= 0 and max_dim >= 1 required");
    auto f = out.open("krein.csv");
    f << "pair,dim,degenerate_dim,involution_error,reconstruction_error,remajorization_ratio,pass\n";
    TaskResult r;
    for (int i = 0; i < pairs; ++i) {
        const int dim = 1 + int((cfg.seed + 7919 * std::uint64_t(i)) % std::uint64_t(max_dim));
        const int ker = dim > 2 ? i % 3 : 0;
        auto k = krein_reduce(random_majorized_pair(dim, ker, cfg.seed * 1000003 + i));
        const bool ok = k.involution_error <= 1e-10 && k.reconstruction_error <= 1e-9 &&
                        (dim == ker || std::abs(k.remajorization_ratio - 1) <= 1e-9);
        if (!ok) r = {false, "random pair " + std::to_string(i) + " failed the Krein checks"};
        f << i << "," << dim << "," << k.degenerate_dim << "," << num(k.involution_error) << ","
          << num(k.reconstruction_error) << "," << num(k.remajorization_ratio) << "," << (ok ? 1 : 0) << "\n";
    }
    if (sec.has("basis") || sec.has("search")) {
        require_scalar(cfg, "krein");
        json g;
        if (sec.has("basis")) {
            std::vector<BorchersMonomial> basis;
            for (const auto& m : sec.monomials("basis")) basis.push_back(m.borchers());
            const int d = cfg.model.dim();
            auto gram = build_gram_pair(cfg.model, basis, [d](const BorchersMonomial& b) {
                return b.slots.empty() ? 1.0 : schwartz_norm(b.slots, {0, 2 * d}).upper;
            }, cfg.quad);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram.W, Eigen::EigenvaluesOnly);
            auto maj = majorization_check(gram);
            g["labels"] = gram.labels;
            g["asymmetry"] = gram.asymmetry;
            g["eigenvalues"] = std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
            g["majorization"] = {{"ratio", maj.ratio}, {"pass", maj.pass}};
            if (maj.pass) {
                auto k = krein_reduce(gram);
                g["krein"] = {{"degenerate_dim", k.degenerate_dim}, {"involution_error", k.involution_error},
                              {"reconstruction_error", k.reconstruction_error},
                              {"remajorization_ratio", k.remajorization_ratio}};
            } else {
                r = {false, "Gram pair is not majorized"};
            }
        }
        if (sec.has("search")) {
            auto s = sec.child("search");
            NegativeSearchSpec ns;
            ns.trials = s.integer("trials", ns.trials);
            ns.max_degree = s.integer("max_degree", ns.max_degree);
            ns.per_degree = s.integer("per_degree", ns.per_degree);
            ns.seed = cfg.seed;
            auto res = search_negative_direction(cfg.model, ns, cfg.quad);
            json dir = json::array();
            for (auto z : res.direction) dir.push_back(complex_json(z));
            g["negative_search"] = {{"result", res.found ? "found" : "not found"}, {"min_eigenvalue", res.min_eigenvalue},
                                    {"threshold", res.threshold}, {"trials", res.trials}, {"labels", res.labels},
                                    {"direction", dir}};
        }
        out.write_json("gram.json", g);
    }
    return r;
}

TaskResult task_cluster(const ExperimentConfig& cfg, Outputs& out) {
    require_scalar(cfg, "cluster");
    auto sec = task_section(cfg, "cluster");
    auto phi = sec.monomials("phi"), psi = sec.monomials("psi");
    if (phi.size() != 1 || psi.size() != 1) throw ConfigError("tasks.cluster: phi and psi take one test function each");
    auto rows = cluster_decay(phi[0].momentum(), psi[0].momentum(), sec.numbers("direction"),
                              sec.numbers("lambdas", std::vector<double>{0, 1, 2, 4, 8, 16}), cfg.model, cfg.quad);
    auto f = out.open("cluster.csv");
    f << "lambda,re,im,abs\n";
    for (const auto& row : rows)
        f << num(row.lambda) << "," << num(row.value.real()) << "," << num(row.value.imag()) << ","
          << num(std::abs(row.value)) << "\n";
    return {};
}

TaskResult task_spectral(const ExperimentConfig& cfg, Outputs& out) {
    require_scalar(cfg, "spectral");
    auto sec = task_section(cfg, "spectral");
    std::vector<MomentumTestFunction> fam;
    auto members = sec.monomials("family");
    for (const auto& m : members) fam.push_back(m.momentum());
    auto rep = spectral_support_check(fam, cfg.model, cfg.quad);
    auto control = sec.monomials("control");
    auto f = out.open("spectral.csv");
    f << "label,kind,abs_value,tolerance\n";
    for (std::size_t i = 0; i < members.size(); ++i)
        f << members[i].label << ",off_support," << num(rep.values[i]) << "," << num(rep.tolerance) << "\n";
    TaskResult r;
    if (rep.max_abs > rep.tolerance) r = {false, "off-support value above tolerance"};
    for (const auto& c : control) {
        const double v = std::abs(w_hat_trunc_scalar(c.momentum(), cfg.model, cfg.quad).value);
        f << c.label << ",control," << num(v) << "," << num(rep.tolerance) << "\n";
        if (v <= 10 * rep.tolerance) r = {false, "control " + c.label + " not above 10x tolerance"};
    }
    return r;
}

TaskResult dispatch(const std::string& cmd, const ExperimentConfig& cfg, Outputs& out) {
    if (cmd == "sample") return task_sample(cfg, out);
    if (cmd == "schwinger") return task_schwinger(cfg, out);
    if (cmd == "wightman") return task_wightman(cfg, out);
    if (cmd == "laplace-check") return task_laplace(cfg, out);
    if (cmd == "bounds") return task_bounds(cfg, out);
    if (cmd == "certify") return task_certify(cfg, out);
    if (cmd == "krein") return task_krein(cfg, out);
    if (cmd == "cluster") return task_cluster(cfg, out);
    if (cmd == "spectral") return task_spectral(cfg, out);
    throw ConfigError("subcommand: unknown '" + cmd + "'");
}

void report_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"status", "error"}, {"kind", kind}, {"message", message}}.dump() << std::endl;
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

json certificate_json(const Certificate& c) {
    json singles = json::array(), pairs = json::array();
    for (const auto& s : c.singles)
        singles.push_back({{"label", s.label}, {"order", s.order}, {"value", complex_json(s.value)}, {"error", s.error},
                           {"norm", s.norm}, {"bound", s.bound}, {"ratio", s.ratio}, {"margin", 1 - s.ratio}});
    for (const auto& p : c.pairs)
        pairs.push_back({{"left", p.left}, {"right", p.right}, {"m", p.m}, {"n", p.n}, {"value", complex_json(p.value)},
                         {"chain_bound", p.chain_bound}, {"bound", p.bound}, {"ratio", p.ratio}, {"margin", 1 - p.ratio}});
    json j{{"n_max", c.n_max},
           {"a", c.table.a},
           {"b", c.chain.b},
           {"c", c.chain.c},
           {"fast_path", c.fast_path},
           {"singles", singles},
           {"pairs", pairs},
           {"worst_single_ratio", c.worst_single_ratio},
           {"worst_pair_ratio", c.worst_pair_ratio},
           {"witnesses", c.witnesses},
           {"scope", "finite span of the tested family"},
           {"pass", c.pass}};
    if (c.table.higher_active) {
        j["factors"] = {{"spatial", c.table.factors.spatial},
                        {"energy_sup", c.table.factors.energy_sup},
                        {"third", c.table.factors.third},
                        {"double_sup", sup_json(c.table.factors.double_sup)}};
    }
    return j;
}

int run(const std::string& subcommand, const std::string& config_path, const Overrides& ov) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg;
    try {
        if (std::find(subcommands().begin(), subcommands().end(), subcommand) == subcommands().end())
            throw ConfigError("subcommand: unknown '" + subcommand + "'");
        cfg = load_config(config_path);
        if (ov.out) cfg.output = *ov.out;
        if (ov.seed) cfg.seed = *ov.seed;
        if (ov.threads) cfg.threads = *ov.threads;
        if (ov.tolerance) {
            if (!(*ov.tolerance > 0)) throw ConfigError("--tolerance: must be positive");
            cfg.quad.rel_tolerance = cfg.sphere.rel_tolerance = *ov.tolerance;
        }
        if (cfg.threads < 1) throw ConfigError("--threads: must be >= 1");
        cfg.quad.threads = cfg.sphere.threads = cfg.grid.threads = cfg.threads;
    } catch (const ConfigError& e) {
        report_error("config", e.what());
        return kExitConfigError;
    }

    const std::string started = utc_now();
    TaskResult result;
    int code = kExitOk;
    std::unique_ptr<Outputs> out;
    try {
        out = std::make_unique<Outputs>(fs::path(cfg.output));
        result = dispatch(subcommand, cfg, *out);
        if (!result.ok) {
            code = kExitTaskFailure;
            report_error("task", result.message);
        }
    } catch (const ConfigError& e) {
        report_error("config", e.what());
        code = kExitConfigError;
    } catch (const std::exception& e) {
        report_error("task", e.what());
        code = kExitTaskFailure;
    }
    if (!out) return code;

    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(cfg.source);
    json manifest{{"tool", "wightlab_cli"},
                  {"version", WIGHTLAB_VERSION},
                  {"subcommand", subcommand},
                  {"config_path", config_path},
                  {"config_hash", "fnv1a64:" + hash.str()},
                  {"seed", cfg.seed},
                  {"threads", cfg.threads},
                  {"tolerance", cfg.quad.rel_tolerance},
                  {"model", model_json(cfg)},
                  {"outputs", out->files()},
                  {"exit_code", code},
                  {"message", result.message},
                  {"started_at", started},
                  {"wall_seconds",
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    std::ofstream(out->dir() / "manifest.json", std::ios::binary) << manifest.dump(2) << "\n";
    return code;
}

int main_entry(int argc, char** argv) {
    CLI::App cli{"wightlab: Euclidean fields, Wightman functions and Hilbert space structure checks"};
    std::string sub, config;
    Overrides ov;
    std::string out;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    double tol = 0;
    cli.add_option("subcommand", sub, "one of: sample schwinger wightman laplace-check bounds certify krein cluster spectral")
        ->required();
    cli.add_option("--config", config, "YAML experiment configuration")->required();
    auto* o_out = cli.add_option("--out", out, "output directory");
    auto* o_seed = cli.add_option("--seed", seed, "random seed");
    auto* o_thr = cli.add_option("--threads", threads, "worker thread cap");
    auto* o_tol = cli.add_option("--tolerance", tol, "relative quadrature tolerance");
    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("config", std::string("arguments: ") + e.what());
        return kExitConfigError;
    }
    if (*o_out) ov.out = out;
    if (*o_seed) ov.seed = seed;
    if (*o_thr) ov.threads = threads;
    if (*o_tol) ov.tolerance = tol;
    return run(sub, config, ov);
}

}  // namespace wightlab::app
