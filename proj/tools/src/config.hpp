// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <yaml-cpp/yaml.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wightlab/bounds.hpp"
#include "wightlab/gram.hpp"
#include "wightlab/lattice.hpp"
#include "wightlab/scalar_model.hpp"
#include "wightlab/vector_measures.hpp"
#include "wightlab/wightman_scalar.hpp"

namespace wightlab::app {

enum class ModelKind { Scalar, Vector };

/// One slot of a test function: Gaussian (width) or compact bump (radius).
struct SlotSpec {
    std::vector<double> center;
    double width = 1;
    bool bump = false;
    double amplitude = 1;

    TestFunction gaussian() const;
    MomentumFactor momentum() const;
};

struct MonomialSpec {
    std::string label;
    std::vector<SlotSpec> slots;
    double coef = 1;

    BorchersMonomial borchers() const;  // Gaussian slots only
    MomentumTestFunction momentum() const;
};

struct ExperimentConfig {
    std::string source;  // raw config text, hashed into the manifest
    ModelKind kind = ModelKind::Scalar;
    ScalarModel model;
    Lattice lattice{2, 64, 0.25};
    HyperplaneQuadrature quad;
    SphericalQuadrature sphere;
    BoundGrid grid;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string output = "wightlab_out";
    YAML::Node tasks;  // per-subcommand sections, read lazily
};

/// Parses and validates; throws ConfigError naming the offending field.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text);

/// Typed field access for task sections; `path` is used in error messages.
class Section {
  public:
    Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {}

    bool has(const std::string& key) const;
    Section child(const std::string& key) const;
    double number(const std::string& key, std::optional<double> fallback = std::nullopt) const;
    int integer(const std::string& key, std::optional<int> fallback = std::nullopt) const;
    std::vector<double> numbers(const std::string& key, std::optional<std::vector<double>> fallback = std::nullopt) const;
    std::vector<SlotSpec> slots(const std::string& key) const;
    std::vector<MonomialSpec> monomials(const std::string& key) const;
    std::vector<std::vector<std::vector<double>>> point_sets(const std::string& key) const;
    const std::string& path() const { return path_; }

  private:
    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
    YAML::Node get(const std::string& key) const;
    SlotSpec slot_at(const YAML::Node& n, const std::string& where) const;

    YAML::Node node_;
    std::string path_;
};

Section task_section(const ExperimentConfig& cfg, const std::string& name);

}  // namespace wightlab::app
