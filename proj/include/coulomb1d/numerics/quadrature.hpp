#pragma once

#include <functional>

namespace c1d {

enum class Domain { zero_to_inf, symmetric_interval, finite };
enum class Singularity { none, log_at_zero, inv_sqrt_at_endpoint };
enum class Scheme { tanh_sinh, gauss_kronrod };

struct QuadratureSpec {
    Domain domain = Domain::zero_to_inf;
    Singularity singularity_hint = Singularity::none;
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_refinements = 10;
    Scheme scheme = Scheme::tanh_sinh;
    // finite: [lower, upper]; symmetric_interval: [-upper, upper]
    double lower = 0.0;
    double upper = 1.0;
    // zero_to_inf splits here into a finite inner panel and a mapped tail.
    double split = 1.0;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Throws convergence_error when error > abs_tol + rel_tol |value| after
// max_refinements.
QuadResult integrate(const Integrand& f, const QuadratureSpec& spec);

// Building blocks. Error is the difference of the last two refinement levels
// for tanh-sinh and |K15 - G7| summed over panels for Gauss-Kronrod.
QuadResult tanh_sinh(const Integrand& f, double a, double b, double tol, int max_levels);
// int_a^inf through u = a - log(1 - s), s in (0, 1).
QuadResult tanh_sinh_tail(const Integrand& f, double a, double tol, int max_levels);
// Gauss-Kronrod refines until error <= abs_tol + tol |value|.
QuadResult gauss_kronrod(const Integrand& f, double a, double b, double tol, int max_panels, double abs_tol = 0.0);
// int_a^inf through u = a + s / (1 - s).
QuadResult gauss_kronrod_tail(const Integrand& f, double a, double tol, int max_panels, double abs_tol = 0.0);

} // namespace c1d
