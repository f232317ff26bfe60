// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "wightlab/errors.hpp"

namespace wightlab::app {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
    throw ConfigError(field + ": " + msg);
}

template <class T>
T scalar_as(const YAML::Node& n, const std::string& field) {
    if (!n.IsScalar()) fail(field, "expected a scalar");
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        fail(field, "cannot parse '" + n.Scalar() + "'");
    }
}

void reject_unknown(const YAML::Node& n, const std::string& where, const std::set<std::string>& allowed) {
    if (!n.IsMap()) fail(where, "expected a mapping");
    for (const auto& kv : n) {
        auto key = kv.first.as<std::string>();
        if (!allowed.count(key)) fail(where.empty() ? key : where + "." + key, "unknown field");
    }
}

double positive(const YAML::Node& n, const std::string& field) {
    double v = scalar_as<double>(n, field);
    if (!(v > 0)) fail(field, "must be positive");
    return v;
}

}  // namespace

TestFunction SlotSpec::gaussian() const {
    if (bump) throw ConfigError("bump slots have no Gaussian form");
    return TestFunction::gaussian(center, width, amplitude);
}

MomentumFactor SlotSpec::momentum() const {
    if (bump) return MomentumFactor::from(BumpFunction{center, width, amplitude});
    return MomentumFactor::from(gaussian());
}

BorchersMonomial MonomialSpec::borchers() const {
    BorchersMonomial b;
    for (const auto& s : slots) b.slots.push_back(s.gaussian());
    b.coef = coef;
    b.label = label;
    return b;
}

MomentumTestFunction MonomialSpec::momentum() const {
    std::vector<MomentumFactor> f;
    for (const auto& s : slots) f.push_back(s.momentum());
    return MomentumTestFunction::product(std::move(f), coef);
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

ExperimentConfig parse_config(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("config: malformed YAML: ") + e.what());
    }
    if (!root.IsMap()) fail("config", "top level must be a mapping");
    reject_unknown(root, "", {"model", "lattice", "quadrature", "bounds", "seed", "threads", "output", "tasks"});

    ExperimentConfig cfg;
    cfg.source = text;
    if (!root["model"]) fail("model", "missing");
    const auto m = root["model"];
    reject_unknown(m, "model", {"kind", "dim", "alpha", "mass", "levy"});
    if (m["kind"]) {
        auto k = scalar_as<std::string>(m["kind"], "model.kind");
        if (k == "scalar") cfg.kind = ModelKind::Scalar;
        else if (k == "vector") cfg.kind = ModelKind::Vector;
        else fail("model.kind", "must be scalar or vector");
    }
    if (!m["dim"]) fail("model.dim", "missing");
    cfg.model.green.dim = scalar_as<int>(m["dim"], "model.dim");
    if (cfg.model.green.dim < 1 || cfg.model.green.dim > 4) fail("model.dim", "must lie in 1..4");
    if (cfg.kind == ModelKind::Vector && cfg.model.green.dim != 4) fail("model.dim", "vector models live in d = 4");
    if (m["alpha"]) cfg.model.green.alpha = scalar_as<double>(m["alpha"], "model.alpha");
    if (cfg.kind == ModelKind::Scalar && !(cfg.model.green.alpha > 0 && cfg.model.green.alpha <= 0.5))
        fail("model.alpha", "must lie in (0, 1/2]");
    if (m["mass"]) cfg.model.green.m0 = positive(m["mass"], "model.mass");
    if (m["levy"]) {
        const auto l = m["levy"];
        reject_unknown(l, "model.levy", {"drift", "sigma2", "atoms"});
        if (l["drift"]) cfg.model.levy.drift = scalar_as<double>(l["drift"], "model.levy.drift");
        if (l["sigma2"]) {
            cfg.model.levy.sigma2 = scalar_as<double>(l["sigma2"], "model.levy.sigma2");
            if (cfg.model.levy.sigma2 < 0) fail("model.levy.sigma2", "must be nonnegative");
        }
        if (l["atoms"]) {
            if (!l["atoms"].IsSequence()) fail("model.levy.atoms", "expected a list");
            int i = 0;
            for (const auto& a : l["atoms"]) {
                const std::string where = "model.levy.atoms[" + std::to_string(i++) + "]";
                reject_unknown(a, where, {"jump", "rate"});
                if (!a["jump"] || !a["rate"]) fail(where, "needs jump and rate");
                Atom atom{scalar_as<double>(a["jump"], where + ".jump"), positive(a["rate"], where + ".rate")};
                if (atom.jump == 0) fail(where + ".jump", "must be nonzero");
                cfg.model.levy.atoms.push_back(atom);
            }
        }
    }
    try {
        cfg.model.validate();
    } catch (const Error& e) {
        fail("model", e.what());
    }

    if (root["lattice"]) {
        const auto l = root["lattice"];
        reject_unknown(l, "lattice", {"sites", "spacing"});
        cfg.lattice.dim = cfg.model.green.dim;
        if (l["sites"]) cfg.lattice.sites_per_axis = scalar_as<int>(l["sites"], "lattice.sites");
        if (cfg.lattice.sites_per_axis < 2 || cfg.lattice.sites_per_axis % 2) fail("lattice.sites", "must be even and >= 2");
        if (l["spacing"]) cfg.lattice.spacing = positive(l["spacing"], "lattice.spacing");
    }
    cfg.lattice.dim = cfg.model.green.dim;

    if (root["quadrature"]) {
        const auto q = root["quadrature"];
        reject_unknown(q, "quadrature", {"rel_tolerance", "abs_tolerance", "max_level"});
        if (q["rel_tolerance"]) cfg.quad.rel_tolerance = cfg.sphere.rel_tolerance = positive(q["rel_tolerance"], "quadrature.rel_tolerance");
        if (q["abs_tolerance"]) cfg.quad.abs_tolerance = cfg.sphere.abs_tolerance = positive(q["abs_tolerance"], "quadrature.abs_tolerance");
        if (q["max_level"]) {
            int lv = scalar_as<int>(q["max_level"], "quadrature.max_level");
            if (lv < 0 || lv > 8) fail("quadrature.max_level", "must lie in 0..8");
            cfg.quad.max_level = cfg.sphere.max_level = lv;
        }
    }
    if (root["bounds"]) {
        const auto b = root["bounds"];
        reject_unknown(b, "bounds", {"points", "half_width", "refinements", "tolerance"});
        if (b["points"]) cfg.grid.points = scalar_as<int>(b["points"], "bounds.points");
        if (cfg.grid.points < 2) fail("bounds.points", "must be >= 2");
        if (b["half_width"]) cfg.grid.half_width = positive(b["half_width"], "bounds.half_width");
        if (b["refinements"]) cfg.grid.refinements = scalar_as<int>(b["refinements"], "bounds.refinements");
        if (cfg.grid.refinements < 0 || cfg.grid.refinements > 3) fail("bounds.refinements", "must lie in 0..3");
        if (b["tolerance"]) cfg.grid.tolerance = positive(b["tolerance"], "bounds.tolerance");
    }
    if (root["seed"]) cfg.seed = scalar_as<std::uint64_t>(root["seed"], "seed");
    if (root["threads"]) {
        int t = scalar_as<int>(root["threads"], "threads");
        if (t < 1) fail("threads", "must be >= 1");
        cfg.threads = unsigned(t);
    }
    if (root["output"]) cfg.output = scalar_as<std::string>(root["output"], "output");
    if (root["tasks"]) {
        if (!root["tasks"].IsMap()) fail("tasks", "expected a mapping");
        reject_unknown(root["tasks"], "tasks",
                       {"sample", "schwinger", "wightman", "laplace-check", "bounds", "certify", "krein",
                        "cluster", "spectral"});
        cfg.tasks = root["tasks"];
    }
    return cfg;
}

Section task_section(const ExperimentConfig& cfg, const std::string& name) {
    YAML::Node n = cfg.tasks && cfg.tasks[name] ? cfg.tasks[name] : YAML::Node(YAML::NodeType::Map);
    return Section(n, "tasks." + name);
}

bool Section::has(const std::string& key) const { return node_.IsMap() && node_[key]; }

YAML::Node Section::get(const std::string& key) const {
    if (!node_.IsMap()) fail(path_, "expected a mapping");
    return node_[key];
}

Section Section::child(const std::string& key) const {
    auto n = get(key);
    return Section(n ? n : YAML::Node(YAML::NodeType::Map), field(key));
}

double Section::number(const std::string& key, std::optional<double> fallback) const {
    auto n = get(key);
    if (!n) {
        if (fallback) return *fallback;
        fail(field(key), "missing");
    }
    return scalar_as<double>(n, field(key));
}

int Section::integer(const std::string& key, std::optional<int> fallback) const {
    auto n = get(key);
    if (!n) {
        if (fallback) return *fallback;
        fail(field(key), "missing");
    }
    return scalar_as<int>(n, field(key));
}

std::vector<double> Section::numbers(const std::string& key, std::optional<std::vector<double>> fallback) const {
    auto n = get(key);
    if (!n) {
        if (fallback) return *fallback;
        fail(field(key), "missing");
    }
    if (!n.IsSequence()) fail(field(key), "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < n.size(); ++i) out.push_back(scalar_as<double>(n[i], field(key) + "[" + std::to_string(i) + "]"));
    return out;
}

SlotSpec Section::slot_at(const YAML::Node& n, const std::string& where) const {
    reject_unknown(n, where, {"center", "width", "radius", "amplitude"});
    SlotSpec s;
    if (!n["center"] || !n["center"].IsSequence()) fail(where + ".center", "missing list");
    for (std::size_t i = 0; i < n["center"].size(); ++i)
        s.center.push_back(scalar_as<double>(n["center"][i], where + ".center[" + std::to_string(i) + "]"));
    if (n["width"] && n["radius"]) fail(where, "give width or radius, not both");
    if (n["radius"]) {
        s.bump = true;
        s.width = positive(n["radius"], where + ".radius");
    } else if (n["width"]) {
        s.width = positive(n["width"], where + ".width");
    } else {
        fail(where + ".width", "missing");
    }
    if (n["amplitude"]) s.amplitude = scalar_as<double>(n["amplitude"], where + ".amplitude");
    return s;
}

std::vector<SlotSpec> Section::slots(const std::string& key) const {
    auto n = get(key);
    if (!n || !n.IsSequence()) fail(field(key), "missing list of slots");
    std::vector<SlotSpec> out;
    for (std::size_t i = 0; i < n.size(); ++i) out.push_back(slot_at(n[i], field(key) + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<MonomialSpec> Section::monomials(const std::string& key) const {
    auto n = get(key);
    if (!n || !n.IsSequence()) fail(field(key), "missing list of test functions");
    std::vector<MonomialSpec> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const std::string where = field(key) + "[" + std::to_string(i) + "]";
        reject_unknown(n[i], where, {"label", "slots", "coef"});
        MonomialSpec m;
        m.label = n[i]["label"] ? scalar_as<std::string>(n[i]["label"], where + ".label") : "F" + std::to_string(i);
        if (n[i]["coef"]) m.coef = scalar_as<double>(n[i]["coef"], where + ".coef");
        if (!n[i]["slots"] || !n[i]["slots"].IsSequence()) fail(where + ".slots", "missing list");
        for (std::size_t j = 0; j < n[i]["slots"].size(); ++j)
            m.slots.push_back(slot_at(n[i]["slots"][j], where + ".slots[" + std::to_string(j) + "]"));
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<std::vector<double>>> Section::point_sets(const std::string& key) const {
    auto n = get(key);
    if (!n || !n.IsSequence()) fail(field(key), "missing list of point sets");
    std::vector<std::vector<std::vector<double>>> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const std::string where = field(key) + "[" + std::to_string(i) + "]";
        if (!n[i].IsSequence()) fail(where, "expected a list of points");
        std::vector<std::vector<double>> set;
        for (std::size_t j = 0; j < n[i].size(); ++j) {
            if (!n[i][j].IsSequence()) fail(where + "[" + std::to_string(j) + "]", "expected coordinates");
            std::vector<double> p;
            for (std::size_t c = 0; c < n[i][j].size(); ++c) p.push_back(scalar_as<double>(n[i][j][c], where));
            set.push_back(std::move(p));
        }
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace wightlab::app
