#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lelat/asymptotics.hpp"
#include "lelat/lattice.hpp"

namespace lelat {

enum class Command { build, spectrum, lel, constant, kdim, converge, audit, perturb };
enum class OutputFormat { csv, json, edgelist };

OutputFormat parse_format(const std::string& s);

/// Full description of one CLI invocation. run() is a pure function of this
/// struct (given a fixed build), which is what the determinism guarantee is
/// stated over.
struct RunConfig {
    Command command = Command::build;
    std::optional<Family> family;
    Boundary boundary = Boundary::torus;
    bool boundary_given = false;  // converge sweeps all boundaries unless one was requested
    int m = 0;  // 0 means per-command default
    int n = 0;
    int k = 2;  // kdim dimension
    int grid = 1024;
    QuadRule rule = QuadRule::midpoint;
    int levels = 3;
    double tolerance = 1e-8;
    std::size_t cap = 4096;
    std::uint64_t seed = 1;
    int trials = 100;
    std::optional<std::string> out;
    std::optional<OutputFormat> format;  // default depends on the command
};

/// Executes one command, printing a human summary to `console` and writing
/// machine-readable artifacts to config.out when set. Returns the process
/// exit status: 0 success, 1 domain/usage error, 2 i/o error, 3 internal.
int run(const RunConfig& config, std::ostream& console);

}  // namespace lelat
