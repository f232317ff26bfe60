// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "wightlab/certify.hpp"

namespace wightlab::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitTaskFailure = 1;
inline constexpr int kExitConfigError = 2;

const std::vector<std::string>& subcommands();

struct Overrides {
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<double> tolerance;
};

/// Runs one subcommand; writes results and manifest.json under the output
/// directory and returns the process exit code.
int run(const std::string& subcommand, const std::string& config_path, const Overrides& ov);

/// Command-line entry point.
int main_entry(int argc, char** argv);

std::uint64_t fnv1a64(const std::string& bytes);

nlohmann::json certificate_json(const Certificate& c);

}  // namespace wightlab::app
