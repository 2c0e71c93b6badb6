#include "coulomb1d/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "coulomb1d/bound/gram.hpp"
#include "coulomb1d/bound/states.hpp"
#include "coulomb1d/errors.hpp"
#include "coulomb1d/numerics/kernels.hpp"
#include "coulomb1d/specfun/coulomb.hpp"

namespace c1d::cli {

namespace {

using io::Cell;
using io::Column;
using io::Table;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Real parse_real(const std::string& s) {
    try {
        return Real(s);
    } catch (const std::exception&) {
        throw config_error("not a number: '" + s + "'");
    }
}

double parse_d(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw config_error("");
        return v;
    } catch (const std::exception&) {
        throw config_error("not a number: '" + s + "'");
    }
}

const char* command_name(Command c) {
    switch (c) {
    case Command::eval: return "eval";
    case Command::scatter: return "scatter";
    case Command::spectrum: return "spectrum";
    case Command::states: return "states";
    case Command::overlap: return "overlap";
    case Command::gram: return "gram";
    case Command::delta: return "delta";
    case Command::wkb: return "wkb";
    }
    return "?";
}

Table base_table(const RunConfig& cfg) {
    Table t;
    t.meta.emplace_back("command", command_name(cfg.command));
    if (cfg.eta) t.meta.emplace_back("eta", *cfg.eta);
    if (cfg.lambda) t.meta.emplace_back("lambda", *cfg.lambda);
    if (cfg.energy) t.meta.emplace_back("energy", *cfg.energy);
    t.meta.emplace_back("precision", std::to_string(cfg.precision));
    t.meta.emplace_back("isa", kernels::isa_name(kernels::active_isa()));
    return t;
}

// Scattering parameters parsed at the current precision.
ProblemParams scattering_params(const RunConfig& cfg) {
    if (cfg.eta) {
        if (cfg.lambda || cfg.energy) throw config_error("give either --eta or --lambda with --energy");
        return ProblemParams::from_eta(parse_real(*cfg.eta));
    }
    if (!cfg.lambda || !cfg.energy) throw config_error("scattering needs --eta, or --lambda and --energy");
    Real e = parse_real(*cfg.energy);
    if (!(e > 0)) throw config_error("scattering needs a positive energy");
    Real lam = parse_real(*cfg.lambda);
    if (lam == 0) return ProblemParams::from_eta(Real(0));
    return ProblemParams::from_lambda_energy(lam, e);
}

double bound_lambda(const RunConfig& cfg) {
    double lam = cfg.lambda ? parse_d(*cfg.lambda) : -1.0;
    if (!(lam < 0.0)) throw domain_error("bound states need an attractive coupling (lambda < 0)");
    return lam;
}

std::string real_str(const Real& x, int digits) { return x.str(std::max(digits, 1), std::ios::scientific); }

Table cmd_eval(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.columns = {{"u", "1"}, {"f", "1"}, {"g", "1"}, {"df", "1"}, {"dg", "1"}, {"regime", "label"}};
    PrecisionGuard g(cfg.precision);
    ProblemParams p = scattering_params(cfg);
    PrecisionContext ctx = PrecisionContext::with_digits(cfg.precision);
    int omitted = 0;
    for (double u : parse_linear_range(cfg.u_range)) {
        if (u == 0.0) {
            ++omitted;
            continue;
        }
        WaveEval w = coulomb_eval(p, Real(u), ctx);
        std::string reg = w.regime == WaveRegime::asymptotic  ? "asymptotic"
                          : w.regime == WaveRegime::maclaurin ? "maclaurin"
                                                              : "series";
        t.add_row({u, static_cast<double>(w.f), static_cast<double>(w.g), static_cast<double>(w.df),
                   static_cast<double>(w.dg), reg});
    }
    if (omitted) t.meta.emplace_back("note", "u = 0 omitted (basic solutions are singular there)");
    return t;
}

Table cmd_scatter(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.meta.emplace_back("form", cfg.form == TruncationForm::hole ? "hole" : "plateau");
    t.columns = {{"log10_eps", "1"},           {"eps", "1/k"},       {"T", "1"},
                 {"T_digits", "1"},            {"achieved_digits", "digits"}, {"rel_change", "1"},
                 {"status", "label"}};
    PrecisionGuard g(std::min(4 * cfg.precision, max_digits()));
    ProblemParams p = scattering_params(cfg);
    std::vector<Real> grid = parse_log_grid(cfg.eps_grid);
    PrecisionContext ctx = PrecisionContext::with_digits(cfg.precision);
    for (const Real& eps : grid) {
        TruncationConfig tc{eps, cfg.form};
        double l10 = static_cast<double>(log10(eps));
        std::string eps_s = real_str(eps, 17);
        try {
            SweepPoint s = transmission_escalated(p, tc, ctx);
            t.add_row({l10, eps_s, static_cast<double>(s.probability),
                       real_str(s.probability, s.achieved_digits - 10), double(s.achieved_digits), s.rel_change,
                       std::string("ok")});
        } catch (const numeric_error&) {
            t.add_row({l10, eps_s, std::nan(""), std::string(""), double(max_digits()), std::nan(""),
                       std::string("escalation_failed")});
        }
    }
    return t;
}

const char* kind_name(StateKind k) { return k == StateKind::regular ? "regular" : "anomalous"; }

Table cmd_spectrum(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.columns = {{"kind", "label"}, {"n", "1"}, {"eta_n", "1"}, {"energy", "E_1"}, {"parity", "1"},
                 {"norm", "1/|lambda|"}};
    double lam = bound_lambda(cfg);
    for (const BoundState& s : spectrum_interlaced(cfg.n_max, lam))
        t.add_row({std::string(kind_name(s.kind)), double(s.n), s.eta_n, s.energy, double(s.parity_factor),
                   s.norm_const});
    return t;
}

Table cmd_states(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.columns.push_back({"u", "1"});
    for (int n = 1; n <= cfg.n_max; ++n) t.columns.push_back({"zeta_" + std::to_string(n), "1"});
    for (int n = 0; n <= cfg.n_max; ++n) t.columns.push_back({"xi_" + std::to_string(n), "1"});
    std::vector<double> u;
    for (double x : parse_linear_range(cfg.u_range))
        if (x != 0.0) u.push_back(x);
    std::vector<std::vector<double>> xi;
    for (int n = 0; n <= cfg.n_max; ++n) xi.push_back(anomalous_on_grid(n, u));
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::vector<Cell> row{u[i]};
        for (int n = 1; n <= cfg.n_max; ++n) row.emplace_back(regular_wavefunction(n, u[i]));
        for (int n = 0; n <= cfg.n_max; ++n) row.emplace_back(xi[n][i]);
        t.add_row(std::move(row));
    }
    return t;
}

BoundState anomalous_state(int n) { return spectrum(StateKind::anomalous, std::max(n, 1)).at(n); }
BoundState regular_state(int n) { return spectrum(StateKind::regular, n).at(n - 1); }

Table cmd_overlap(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.meta.emplace_back("pairs", cfg.pairs);
    t.columns = {{"quantity", "label"}, {"n", "1"},     {"p", "1"},
                 {"domain", "label"},   {"value", "1"}, {"cross_check", "1"}};
    double lam = bound_lambda(cfg);
    double L = std::abs(lam);
    bool all = cfg.pairs == "all";
    if (all || cfg.pairs == "anomalous") {
        for (auto [n, p] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
            BoundState a = anomalous_state(n), b = anomalous_state(p);
            double ts = overlap(a, b, OverlapDomain::half_line, lam, Scheme::tanh_sinh);
            double gk = overlap(a, b, OverlapDomain::half_line, lam, Scheme::gauss_kronrod);
            t.add_row({std::string("xi_overlap"), double(n), double(p), std::string("half_line"), ts, gk});
            t.add_row({std::string("xi_overlap_coefficient_of_2_over_lambda"), double(n), double(p),
                       std::string("half_line"), ts * L / 2, gk * L / 2});
        }
        EllipticForms ef = elliptic_closed_forms();
        t.add_row({std::string("elliptic_closed_form"), 0.0, 1.0, std::string("half_line"), ef.f01, std::nan("")});
        t.add_row({std::string("elliptic_closed_form"), 0.0, 2.0, std::string("half_line"), ef.f02, std::nan("")});
        t.add_row({std::string("elliptic_closed_form"), 1.0, 2.0, std::string("half_line"), ef.f12, std::nan("")});
        for (int n = 0; n <= cfg.n_max; ++n) {
            AnomalousNorm an = anomalous_norm(n);
            t.add_row({std::string("xi_norm_u"), double(n), double(n), std::string("half_line"), an.half_line,
                       an.half_line_exact});
            t.add_row({std::string("beta"), double(n), double(n), std::string("half_line"), an.beta, an.beta_exact});
        }
    }
    if (all || cfg.pairs == "cross") {
        BoundState a = anomalous_state(0), b = regular_state(1);
        double ts = overlap(a, b, OverlapDomain::half_line, lam, Scheme::tanh_sinh);
        double gk = overlap(a, b, OverlapDomain::half_line, lam, Scheme::gauss_kronrod);
        t.add_row({std::string("xi_zeta_overlap"), 0.0, 1.0, std::string("half_line"), ts, gk});
        t.add_row({std::string("xi_zeta_overlap"), 0.0, 1.0, std::string("full_line"),
                   overlap(a, b, OverlapDomain::full_line, lam), std::nan("")});
    }
    if (all || cfg.pairs == "regular") {
        for (int n = 1; n <= std::max(cfg.n_max, 2); ++n) {
            t.add_row({std::string("zeta_norm_u"), double(n), double(n), std::string("half_line"), regular_norm(n),
                       std::nan("")});
            for (int m = n + 1; m <= std::max(cfg.n_max, 2); ++m)
                t.add_row({std::string("zeta_overlap"), double(n), double(m), std::string("half_line"),
                           regular_orthogonality(n, m) / L, std::nan("")});
        }
    }
    if (t.rows.empty()) throw config_error("--pairs must be anomalous, cross, regular or all");
    return t;
}

Table cmd_gram(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.columns = {{"section", "label"}, {"N", "1"}, {"i", "1"}, {"j", "1"}, {"value", "1"}};
    const int N = cfg.gram_N;
    if (N < 1) throw config_error("--N must be >= 1");
    Matrix raw = anomalous_overlap_matrix(N);
    GramResult g = gram_from_overlaps(raw, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) t.add_row({std::string("M"), double(N), double(i), double(j), g.M[i][j]});
    for (int i = 0; i < N; ++i) t.add_row({std::string("eigenvalue"), double(N), double(i), double(i), g.eigenvalues[i]});
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) t.add_row({std::string("P"), double(N), double(i), double(j), g.P[i][j]});
    for (int n = 2; n <= N; ++n) {
        GramResult s = gram_from_overlaps(raw, n);
        t.add_row({std::string("P_1N"), double(n), 0.0, double(n - 1), s.P[0][n - 1]});
        t.add_row({std::string("diag_deviation"), double(n), 0.0, 0.0, s.diagonal_deviation});
    }
    return t;
}

Table cmd_delta(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.columns = {{"n", "1"}, {"p", "1"}, {"delta", "1"}, {"uncertainty", "1"}, {"delta_times_pi", "1"}};
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int p = n + 1; p <= cfg.n_max; ++p) {
            DeltaResult d = delta_np(n, p);
            t.add_row({double(n), double(p), d.limit.value, d.limit.uncertainty, d.limit.value * std::numbers::pi});
        }
    return t;
}

Table cmd_wkb(const RunConfig& cfg) {
    Table t = base_table(cfg);
    t.meta.emplace_back("mass", io::format_double(cfg.mass));
    t.meta.emplace_back("coupling", io::format_double(cfg.coupling));
    t.meta.emplace_back("energy_wkb", io::format_double(cfg.wkb_energy));
    t.columns = {{"R", "length"},     {"lambda_G", "1"}, {"lambda_G_closed", "1"}, {"lambda_R", "1"},
                 {"lambda_R_closed", "1"}, {"P", "1"},  {"P_printed", "1"},      {"P_sqrt", "1"},
                 {"exact_T", "1"}};
    PrecisionGuard g(cfg.precision);
    PrecisionContext ctx = PrecisionContext::with_digits(cfg.precision);
    for (const Real& r : parse_log_grid(cfg.r_grid)) {
        double R = static_cast<double>(r);
        WkbResult w = wkb_gamow(cfg.mass, cfg.coupling, cfg.wkb_energy, R, ctx);
        t.add_row({R, w.lambda_G, w.lambda_G_closed, w.lambda_R, w.lambda_R_closed, w.P, w.P_printed, w.P_sqrt,
                   w.exact_T});
    }
    return t;
}

} // namespace

void RunConfig::validate() const {
    if (precision < 16) throw config_error("--precision must be >= 16");
    if (precision > max_digits())
        throw resource_error("--precision " + std::to_string(precision) + " exceeds the cap of " +
                             std::to_string(max_digits()) + " digits");
    if (n_max < 1) throw config_error("--n-max must be >= 1");
    if (n_max > 40) throw config_error("--n-max above 40 is outside the double-precision wavefunction range");
}

std::vector<Real> parse_log_grid(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) throw config_error("grid must be a:b:n, got '" + spec + "'");
    Real a = parse_real(parts[0]), b = parse_real(parts[1]);
    double nd = parse_d(parts[2]);
    if (!(a > 0 && b > 0)) throw config_error("log grid endpoints must be positive");
    if (nd < 1 || nd != std::floor(nd) || nd > 100000) throw config_error("grid count must be a positive integer");
    int n = static_cast<int>(nd);
    std::vector<Real> out;
    Real la = log(a), lb = log(b);
    for (int i = 0; i < n; ++i) {
        if (i == 0) out.push_back(a);
        else if (i == n - 1) out.push_back(b);
        else out.push_back(exp(la + (lb - la) * i / (n - 1)));
    }
    return out;
}

std::vector<double> parse_linear_range(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) throw config_error("range must be a:b:step, got '" + spec + "'");
    double a = parse_d(parts[0]), b = parse_d(parts[1]), h = parse_d(parts[2]);
    if (!(h > 0.0)) throw config_error("range step must be positive");
    if (!(b >= a)) throw config_error("range end must not precede its start");
    double count = std::floor((b - a) / h + 1e-9);
    if (count > 1e6) throw config_error("range has too many points");
    std::vector<double> out;
    for (long i = 0; i <= static_cast<long>(count); ++i) {
        double u = a + h * static_cast<double>(i);
        // Snap grid points that should be exactly 0 after accumulated rounding.
        if (std::abs(u) < 1e-9 * h) u = 0.0;
        out.push_back(u);
    }
    return out;
}

io::Table run(const RunConfig& cfg) {
    cfg.validate();
    switch (cfg.command) {
    case Command::eval: return cmd_eval(cfg);
    case Command::scatter: return cmd_scatter(cfg);
    case Command::spectrum: return cmd_spectrum(cfg);
    case Command::states: return cmd_states(cfg);
    case Command::overlap: return cmd_overlap(cfg);
    case Command::gram: return cmd_gram(cfg);
    case Command::delta: return cmd_delta(cfg);
    case Command::wkb: return cmd_wkb(cfg);
    }
    throw config_error("unknown command");
}

} // namespace c1d::cli
