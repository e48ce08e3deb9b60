#pragma once

#include <functional>

namespace hestonrnd::numerics {

/// Controls the semi-infinite adaptive quadrature: per-call error target,
/// panel budget and the tail-truncation threshold.
struct QuadratureSpec {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    int max_panels = 64;
    double tail_cutoff = 1e-12;

    void validate() const;
};

/// Standard normal cdf.
double norm_cdf(double x);

/// Standard normal pdf.
double norm_pdf(double x);

/// log(norm_cdf(x)), stable deep into the left tail where the cdf
/// itself underflows.
double norm_cdf_log(double x);

/// log Gamma(a), a > 0. Lanczos approximation (g = 7, 9 coefficients).
double ln_gamma(double a);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series expansion for x < a + 1, continued fraction otherwise.
double reg_gamma_lower(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed
/// without cancellation in the far right tail.
double reg_gamma_upper(double a, double x);

/// Bracketed root finding (Brent). Requires f(lo) * f(hi) < 0.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-10, int max_iter = 200);

/// Adaptive Simpson on a finite interval.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 48);

/// Integrates f over [lower, inf) for decaying integrands: fixed-width
/// panels are accumulated until a panel's absolute contribution drops
/// below spec.tail_cutoff. Throws std::runtime_error if max_panels is
/// exhausted first.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double lower, const QuadratureSpec& spec = {});

}  // namespace hestonrnd::numerics
