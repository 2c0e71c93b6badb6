#pragma once

#include <stdexcept>
#include <string>

namespace c1d {

// Every library failure derives from numeric_error or config_error so the CLI
// can map them onto exit codes without inspecting messages.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : config_error {
    using config_error::config_error;
};

struct pole_error : domain_error {
    using domain_error::domain_error;
};

struct branch_error : domain_error {
    using domain_error::domain_error;
};

struct convergence_error : numeric_error {
    using numeric_error::numeric_error;
};

// Requested precision exceeds the configured cap.
struct resource_error : numeric_error {
    using numeric_error::numeric_error;
};

} // namespace c1d
