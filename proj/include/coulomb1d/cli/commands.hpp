#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coulomb1d/io/table.hpp"
#include "coulomb1d/numerics/precision.hpp"
#include "coulomb1d/scatter/scatter.hpp"

namespace c1d::cli {

enum class Command { eval, scatter, spectrum, states, overlap, gram, delta, wkb };

struct RunConfig {
    Command command = Command::eval;
    // Physics inputs as decimal strings so they reach full working precision.
    std::optional<std::string> lambda, energy, eta;
    std::string eps_grid = "1e-1:1e-10:10";  // a:b:n, n log-spaced points from a to b
    std::string u_range = "-15:15:0.05";     // a:b:step
    std::string r_grid = "1e-1:1e-12:12";    // a:b:n for wkb
    int n_max = 3;
    int gram_N = 4;
    std::string pairs = "all";  // anomalous | cross | regular | all
    int precision = 50;
    TruncationForm form = TruncationForm::hole;
    io::Format format = io::Format::csv;
    std::string out;  // empty: stdout
    double mass = 0.5;
    double coupling = 1.0;
    double wkb_energy = 0.01;

    void validate() const;  // throws config_error, or resource_error above the precision cap
};

// Log-spaced grid from a to b with n >= 2 points (n = 1 gives {a}), computed at the current precision.
std::vector<Real> parse_log_grid(const std::string& spec);
// Linear a:b:step grid of doubles.
std::vector<double> parse_linear_range(const std::string& spec);

// Pure: identical configs give identical tables.
io::Table run(const RunConfig& cfg);

} // namespace c1d::cli
