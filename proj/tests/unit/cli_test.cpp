// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "app.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("wightlab_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& err) {
    std::string cmd = std::string(WIGHTLAB_CLI_PATH) + " " + args + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kGaussian = R"(model:
  kind: scalar
  dim: 2
  alpha: 0.5
  mass: 1.0
  levy: {sigma2: 1.0}
tasks:
  certify:
    n_max: 4
    family:
      - {label: a, slots: [{center: [1.5, 0.2], width: 0.7}]}
      - {label: b, slots: [{center: [-1.2, 0.5], width: 0.8}]}
      - {label: ab, slots: [{center: [1.5, 0.2], width: 0.7}, {center: [-1.2, -0.3], width: 0.9}]}
  krein:
    random_pairs: 6
    max_dim: 8
)";

}  // namespace

TEST(Cli, GaussianCertifyPasses) {
    auto dir = scratch("certify");
    std::ofstream(dir / "g.yaml") << kGaussian;
    int code = run_cli("certify --config " + (dir / "g.yaml").string() + " --out " + (dir / "out").string(),
                       dir / "err.txt");
    EXPECT_EQ(code, 0) << slurp(dir / "err.txt");
    auto cert = json::parse(slurp(dir / "out" / "certificate.json"));
    EXPECT_TRUE(cert["pass"].get<bool>());
    EXPECT_TRUE(cert["fast_path"].get<bool>());
    auto manifest = json::parse(slurp(dir / "out" / "manifest.json"));
    EXPECT_EQ(manifest["subcommand"], "certify");
    EXPECT_EQ(manifest["exit_code"], 0);
    EXPECT_EQ(manifest["config_hash"].get<std::string>().rfind("fnv1a64:", 0), 0u);
    EXPECT_EQ(manifest["outputs"][0], "certificate.json");
}

TEST(Cli, MalformedConfigNamesField) {
    auto dir = scratch("malformed");
    std::ofstream(dir / "bad.yaml") << "model:\n  dim: 2\n  alpha: 0.9\n";
    int code = run_cli("certify --config " + (dir / "bad.yaml").string() + " --out " + (dir / "out").string(),
                       dir / "err.txt");
    EXPECT_EQ(code, 2);
    auto err = json::parse(slurp(dir / "err.txt"));
    EXPECT_EQ(err["kind"], "config");
    EXPECT_NE(err["message"].get<std::string>().find("model.alpha"), std::string::npos);

    std::ofstream(dir / "typo.yaml") << "model:\n  dim: 2\n  levy: {sigma: 1}\n";
    code = run_cli("certify --config " + (dir / "typo.yaml").string(), dir / "err2.txt");
    EXPECT_EQ(code, 2);
    EXPECT_NE(slurp(dir / "err2.txt").find("model.levy.sigma"), std::string::npos);
}

TEST(Cli, UnknownSubcommandAndFlags) {
    auto dir = scratch("unknown");
    std::ofstream(dir / "g.yaml") << kGaussian;
    EXPECT_EQ(run_cli("transmogrify --config " + (dir / "g.yaml").string(), dir / "err.txt"), 2);
    EXPECT_EQ(run_cli("certify", dir / "err.txt"), 2);
    EXPECT_EQ(run_cli("certify --config " + (dir / "missing.yaml").string(), dir / "err.txt"), 2);
    EXPECT_EQ(run_cli("certify --config " + (dir / "g.yaml").string() + " --tolerance -1", dir / "err.txt"), 2);
}

TEST(Cli, KreinIsReproducible) {
    auto dir = scratch("krein");
    std::ofstream(dir / "g.yaml") << kGaussian;
    for (const char* o : {"o1", "o2"})
        EXPECT_EQ(run_cli("krein --seed 9 --config " + (dir / "g.yaml").string() + " --out " + (dir / o).string(),
                          dir / "err.txt"),
                  0);
    EXPECT_EQ(slurp(dir / "o1" / "krein.csv"), slurp(dir / "o2" / "krein.csv"));
    auto manifest = json::parse(slurp(dir / "o1" / "manifest.json"));
    EXPECT_EQ(manifest["seed"], 9);
}

TEST(Cli, LaplaceCheckTwoPoint) {
    auto dir = scratch("laplace");
    std::ofstream(dir / "l.yaml") << R"(model: {dim: 2, alpha: 0.5, mass: 1.0, levy: {sigma2: 1.0}}
lattice: {sites: 128, spacing: 0.125}
tasks:
  laplace-check:
    points: [[[-0.5, 0.0], [0.5, 0.25]]]
)";
    int code = run_cli("laplace-check --config " + (dir / "l.yaml").string() + " --out " + (dir / "out").string(),
                       dir / "err.txt");
    EXPECT_EQ(code, 0) << slurp(dir / "err.txt");
    std::istringstream csv(slurp(dir / "out" / "laplace.csv"));
    std::string header, row;
    std::getline(csv, header);
    std::getline(csv, row);
    std::vector<std::string> cells;
    std::stringstream rs(row);
    for (std::string c; std::getline(rs, c, ',');) cells.push_back(c);
    ASSERT_EQ(cells.size(), 6u);
    EXPECT_EQ(cells[1], "2");
    EXPECT_LE(std::stod(cells[4]), 1e-2);
}

TEST(Cli, ConfigParsingInProcess) {
    auto cfg = wightlab::app::parse_config(kGaussian);
    EXPECT_EQ(cfg.model.dim(), 2);
    EXPECT_DOUBLE_EQ(cfg.model.levy.sigma2, 1.0);
    auto sec = wightlab::app::task_section(cfg, "certify");
    EXPECT_EQ(sec.integer("n_max"), 4);
    EXPECT_EQ(sec.monomials("family").size(), 3u);
    EXPECT_THROW(sec.number("missing_field"), wightlab::ConfigError);
    EXPECT_EQ(wightlab::app::fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(wightlab::app::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}
