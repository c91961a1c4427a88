#pragma once

// JSON configuration files (comments allowed) and per-family templates.

#include <cstdint>
#include <optional>
#include <string>

#include "disagree/game.hpp"

namespace disagree {

struct LoadedConfig {
    GameConfig game;
    std::optional<std::uint64_t> seed;  // mandatory only when Monte Carlo is requested
    std::optional<std::uint64_t> mc_paths;
    int output_atoms = kDefaultOutputAtoms;
};

struct ConfigOverrides {
    std::optional<int> effort_points;
    std::optional<int> output_atoms;
};

// Throws ConfigError; syntax errors carry "origin:line:column".
LoadedConfig parse_config(const std::string& text, const std::string& origin = "<config>",
                          const ConfigOverrides& overrides = {});
LoadedConfig load_config(const std::string& path, const ConfigOverrides& overrides = {});

// Commented, parseable template with example parameter values for a family.
std::string config_template(Family family);

}  // namespace disagree
