#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "coulomb1d/cli/commands.hpp"
#include "coulomb1d/errors.hpp"

namespace {

enum Exit { ok = 0, bad_config = 2, numeric_failure = 3, io_failure = 4 };

struct Sub {
    c1d::cli::Command command;
    const char* name;
    const char* help;
};

const Sub subs[] = {
    {c1d::cli::Command::eval, "eval", "basic Coulomb solutions f, g and derivatives on a u grid"},
    {c1d::cli::Command::scatter, "scatter", "transmission through the truncated barrier over an epsilon sweep"},
    {c1d::cli::Command::spectrum, "spectrum", "regular and anomalous bound-state energies"},
    {c1d::cli::Command::states, "states", "bound-state wavefunctions on a u grid"},
    {c1d::cli::Command::overlap, "overlap", "overlaps, norms and beta coefficients"},
    {c1d::cli::Command::gram, "gram", "anomalous overlap matrix and its inverse square root"},
    {c1d::cli::Command::delta, "delta", "hermiticity boundary terms Delta_np extrapolated from the small-u bracket"},
    {c1d::cli::Command::wkb, "wkb", "WKB Gamow factor convergence in the cutoff R"},
};

void add_options(CLI::App* sc, c1d::cli::RunConfig& cfg) {
    static const std::map<std::string, c1d::TruncationForm> forms{{"hole", c1d::TruncationForm::hole},
                                                                   {"plateau", c1d::TruncationForm::plateau}};
    static const std::map<std::string, c1d::io::Format> formats{{"csv", c1d::io::Format::csv},
                                                                 {"json", c1d::io::Format::json}};
    sc->add_option("--lambda", cfg.lambda, "coupling lambda (bound states need lambda < 0)");
    sc->add_option("--energy", cfg.energy, "energy E > 0 for scattering");
    sc->add_option("--eta", cfg.eta, "Sommerfeld parameter, k = 1");
    sc->add_option("--eps-grid", cfg.eps_grid, "a:b:n log-spaced truncation widths")->capture_default_str();
    sc->add_option("--u-range", cfg.u_range, "a:b:step linear u grid")->capture_default_str();
    sc->add_option("--r-grid", cfg.r_grid, "a:b:n log-spaced WKB cutoffs")->capture_default_str();
    sc->add_option("--n-max", cfg.n_max, "highest state index")->capture_default_str();
    sc->add_option("--N", cfg.gram_N, "Gram matrix size")->capture_default_str();
    sc->add_option("--pairs", cfg.pairs, "anomalous | cross | regular | all")->capture_default_str();
    sc->add_option("--precision", cfg.precision, "working decimal digits")->capture_default_str();
    sc->add_option("--form", cfg.form, "hole | plateau")->transform(CLI::CheckedTransformer(forms));
    sc->add_option("--format", cfg.format, "csv | json")->transform(CLI::CheckedTransformer(formats));
    sc->add_option("--out", cfg.out, "output file (default stdout)");
    sc->add_option("--mass", cfg.mass, "WKB particle mass")->capture_default_str();
    sc->add_option("--coupling", cfg.coupling, "WKB repulsive coupling c in V = c/r")->capture_default_str();
    sc->add_option("--wkb-energy", cfg.wkb_energy, "WKB energy")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coulomb1d: the one-dimensional Coulomb problem"};
    app.require_subcommand(1);
    c1d::cli::RunConfig cfg;
    for (const Sub& s : subs) {
        CLI::App* sc = app.add_subcommand(s.name, s.help);
        add_options(sc, cfg);
        sc->callback([&cfg, cmd = s.command] { cfg.command = cmd; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : bad_config;
    }

    c1d::io::Table table;
    try {
        table = c1d::cli::run(cfg);
    } catch (const c1d::config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return bad_config;
    } catch (const c1d::numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numeric_failure;
    }

    if (cfg.out.empty()) {
        c1d::io::write(table, cfg.format, std::cout);
        std::cout.flush();
        return std::cout ? ok : io_failure;
    }
    std::ofstream os(cfg.out);
    if (!os) {
        std::cerr << "cannot open " << cfg.out << '\n';
        return io_failure;
    }
    c1d::io::write(table, cfg.format, os);
    os.close();
    if (!os) {
        std::cerr << "write failed: " << cfg.out << '\n';
        return io_failure;
    }
    return ok;
}
