#include "hestonrnd/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hestonrnd::numerics {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;
}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
    if (max_panels < 1) throw std::invalid_argument("QuadratureSpec: max_panels must be >= 1");
    if (!(tail_cutoff > 0.0)) throw std::invalid_argument("QuadratureSpec: tail_cutoff must be > 0");
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double norm_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double norm_cdf_log(double x) {
    if (x > -12.0) return std::log(norm_cdf(x));
    // Asymptotic expansion of Mills' ratio for the far left tail.
    const double z = -x;
    const double zi = 1.0 / (z * z);
    double series = 1.0 + zi * (-1.0 + zi * (3.0 + zi * (-15.0 + zi * 105.0)));
    return -0.5 * z * z - std::log(z * kSqrt2Pi) + std::log(series);
}

double ln_gamma(double a) {
    if (!(a > 0.0)) throw std::domain_error("ln_gamma: argument must be > 0");
    static const double coef[9] = {
        0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
    if (a < 0.5) {
        // Reflection: Gamma(a) Gamma(1-a) = pi / sin(pi a).
        return std::log(M_PI / std::sin(M_PI * a)) - ln_gamma(1.0 - a);
    }
    const double x = a - 1.0;
    double sum = coef[0];
    for (int i = 1; i < 9; ++i) sum += coef[i] / (x + i);
    const double t = x + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (x + 0.5) * std::log(t) - t + std::log(sum);
}

namespace {

// Series representation of P(a, x), converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
    }
    throw std::runtime_error("reg_gamma_lower: series failed to converge");
}

// Continued fraction for Q(a, x) (modified Lentz), best for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    const double fpmin = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - ln_gamma(a));
    }
    throw std::runtime_error("reg_gamma_lower: continued fraction failed to converge");
}

}  // namespace

double reg_gamma_lower(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("reg_gamma_lower: a must be > 0");
    if (x < 0.0) throw std::domain_error("reg_gamma_lower: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double reg_gamma_upper(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("reg_gamma_upper: a must be > 0");
    if (x < 0.0) throw std::domain_error("reg_gamma_upper: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("brent_root: tol must be > 0");
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("brent_root: no sign change on bracket");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // Inverse quadratic interpolation / secant step.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw std::runtime_error("brent_root: did not converge");
}

namespace {

double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                       double fa, double fm, double fb, double whole, double tol,
                       int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double lower, const QuadratureSpec& spec) {
    spec.validate();
    constexpr double panel_width = 8.0;
    double total = 0.0;
    double a = lower;
    // Each panel is seeded with unit-width slices: pricing integrands
    // oscillate at O(1) frequency in omega, and a single Simpson estimate
    // across several periods can alias into false convergence.
    constexpr int slices = 8;
    for (int panel = 0; panel < spec.max_panels; ++panel) {
        const double b = a + panel_width;
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)) /
                           std::max(4, spec.max_panels / 8);
        double contrib = 0.0;
        for (int s = 0; s < slices; ++s) {
            const double sa = a + (b - a) * s / slices;
            const double sb = a + (b - a) * (s + 1) / slices;
            contrib += integrate_adaptive(f, sa, sb, tol / slices);
        }
        total += contrib;
        if (std::fabs(contrib) < spec.tail_cutoff) return total;
        a = b;
    }
    throw std::runtime_error(
        "integrate_semi_infinite: tail did not decay below cutoff within max_panels");
}

}  // namespace hestonrnd::numerics
