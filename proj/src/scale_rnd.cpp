#include "hestonrnd/scale_rnd.hpp"

#include <cmath>
#include <stdexcept>

namespace hestonrnd::scale_rnd {

namespace num = hestonrnd::numerics;

const char* kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::LogNormal: return "LogNormal";
        case FamilyKind::Gamma: return "Gamma";
        case FamilyKind::InverseGaussian: return "InvGaussian";
        case FamilyKind::Weibull: return "Weibull";
        case FamilyKind::InverseWeibull: return "InvWeibull";
    }
    throw std::invalid_argument("kind_name: unknown family");
}

FamilyKind kind_from_name(const std::string& name) {
    if (name == "lognormal" || name == "LogNormal" || name == "bs") return FamilyKind::LogNormal;
    if (name == "gamma" || name == "Gamma") return FamilyKind::Gamma;
    if (name == "invgauss" || name == "InvGaussian") return FamilyKind::InverseGaussian;
    if (name == "weibull" || name == "Weibull") return FamilyKind::Weibull;
    if (name == "invweibull" || name == "InvWeibull") return FamilyKind::InverseWeibull;
    throw std::invalid_argument("unknown RND family: " + name);
}

namespace {

// h_j(xi) = Gamma(1 + j/xi); the inverse family uses Gamma(1 - j/xi).
double h_moment(int j, double xi) { return std::exp(num::ln_gamma(1.0 + j / xi)); }
double h_moment_inv(int j, double xi) { return std::exp(num::ln_gamma(1.0 - j / xi)); }

// Residual of the moment-ratio equation h2/h1^2 = 1 + nu^2 in log form.
double weibull_residual(double xi, double nu) {
    return num::ln_gamma(1.0 + 2.0 / xi) - 2.0 * num::ln_gamma(1.0 + 1.0 / xi) -
           std::log1p(nu * nu);
}

double inv_weibull_residual(double xi, double nu) {
    return num::ln_gamma(1.0 - 2.0 / xi) - 2.0 * num::ln_gamma(1.0 - 1.0 / xi) -
           std::log1p(nu * nu);
}

double solve_weibull_shape(double nu) {
    auto f = [nu](double xi) { return weibull_residual(xi, nu); };
    return num::brent_root(f, 0.5, 500.0);
}

double solve_inv_weibull_shape(double nu) {
    const double lo = 2.0 + 1e-6, hi = 500.0;
    if (inv_weibull_residual(hi, nu) > 0.0)
        throw std::runtime_error(
            "make_standardized: no Inverse-Weibull shape > 2 matches this nu");
    auto f = [nu](double xi) { return inv_weibull_residual(xi, nu); };
    return num::brent_root(f, lo, hi);
}

}  // namespace

StandardizedRND make_standardized(FamilyKind kind, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("make_standardized: nu must be > 0");
    StandardizedRND r{kind, nu, 0.0, 1.0};
    switch (kind) {
        case FamilyKind::LogNormal:
            r.shape = nu;
            break;
        case FamilyKind::Gamma:
        case FamilyKind::InverseGaussian:
            r.shape = 1.0 / (nu * nu);
            break;
        case FamilyKind::Weibull:
            r.shape = solve_weibull_shape(nu);
            r.scale1 = 1.0 / h_moment(1, r.shape);
            break;
        case FamilyKind::InverseWeibull:
            r.shape = solve_inv_weibull_shape(nu);
            r.scale1 = 1.0 / h_moment_inv(1, r.shape);
            break;
    }
    return r;
}

double cdf1(const StandardizedRND& rnd, double u) {
    if (!(u > 0.0)) return 0.0;
    const double nu = rnd.nu;
    switch (rnd.kind) {
        case FamilyKind::LogNormal:
            return num::norm_cdf((std::log(u) + 0.5 * nu * nu) / nu);
        case FamilyKind::Gamma:
            return num::reg_gamma_lower(rnd.shape, rnd.shape * u);
        case FamilyKind::InverseGaussian: {
            const double su = std::sqrt(u);
            const double first = num::norm_cdf((u - 1.0) / (nu * su));
            // exp(2/nu^2) * Phi(-(u+1)/(nu sqrt(u))) combined in log space;
            // either factor alone can over/underflow for small nu.
            const double log_second =
                2.0 * rnd.shape + num::norm_cdf_log(-(u + 1.0) / (nu * su));
            const double q = first + (log_second < -745.0 ? 0.0 : std::exp(log_second));
            return q > 1.0 ? 1.0 : q;
        }
        case FamilyKind::Weibull:
            return -std::expm1(-std::pow(u / rnd.scale1, rnd.shape));
        case FamilyKind::InverseWeibull:
            return std::exp(-std::pow(rnd.scale1 / u, rnd.shape));
    }
    throw std::invalid_argument("cdf1: unknown family");
}

double sf1(const StandardizedRND& rnd, double u) {
    if (!(u > 0.0)) return 1.0;
    const double nu = rnd.nu;
    switch (rnd.kind) {
        case FamilyKind::LogNormal:
            return num::norm_cdf(-(std::log(u) + 0.5 * nu * nu) / nu);
        case FamilyKind::Gamma:
            return num::reg_gamma_upper(rnd.shape, rnd.shape * u);
        case FamilyKind::InverseGaussian: {
            const double su = std::sqrt(u);
            const double first = num::norm_cdf(-(u - 1.0) / (nu * su));
            const double log_second =
                2.0 * rnd.shape + num::norm_cdf_log(-(u + 1.0) / (nu * su));
            const double s =
                first - (log_second < -745.0 ? 0.0 : std::exp(log_second));
            return s < 0.0 ? 0.0 : s;
        }
        case FamilyKind::Weibull:
            return std::exp(-std::pow(u / rnd.scale1, rnd.shape));
        case FamilyKind::InverseWeibull:
            return -std::expm1(-std::pow(rnd.scale1 / u, rnd.shape));
    }
    throw std::invalid_argument("sf1: unknown family");
}

double pdf1(const StandardizedRND& rnd, double u) {
    if (!(u > 0.0)) return 0.0;
    const double nu = rnd.nu;
    switch (rnd.kind) {
        case FamilyKind::LogNormal:
            return num::norm_pdf((std::log(u) + 0.5 * nu * nu) / nu) / (u * nu);
        case FamilyKind::Gamma: {
            const double a = rnd.shape;
            const double lp = a * std::log(a) + (a - 1.0) * std::log(u) - a * u -
                              num::ln_gamma(a);
            return std::exp(lp);
        }
        case FamilyKind::InverseGaussian: {
            const double su = std::sqrt(u);
            return num::norm_pdf((u - 1.0) / (nu * su)) / (nu * u * su);
        }
        case FamilyKind::Weibull: {
            const double z = u / rnd.scale1;
            return rnd.shape / rnd.scale1 * std::pow(z, rnd.shape - 1.0) *
                   std::exp(-std::pow(z, rnd.shape));
        }
        case FamilyKind::InverseWeibull: {
            const double z = rnd.scale1 / u;
            return rnd.shape / rnd.scale1 * std::pow(z, rnd.shape + 1.0) *
                   std::exp(-std::pow(z, rnd.shape));
        }
    }
    throw std::invalid_argument("pdf1: unknown family");
}

double truncated_mean1(const StandardizedRND& rnd, double s) {
    if (s < 0.0) throw std::invalid_argument("truncated_mean1: s must be >= 0");
    if (s == 0.0) return 1.0;
    const double nu = rnd.nu;
    switch (rnd.kind) {
        case FamilyKind::LogNormal:
            return num::norm_cdf(-(std::log(s) - 0.5 * nu * nu) / nu);
        case FamilyKind::Gamma:
            return num::reg_gamma_upper(rnd.shape + 1.0, rnd.shape * s);
        case FamilyKind::InverseGaussian: {
            // No closed form: integrate u q1(u) over [s, inf) with the
            // substitution u = s + w/(1-w).
            auto integrand = [&](double w) {
                const double om = 1.0 - w;
                const double u = s + w / om;
                return u * pdf1(rnd, u) / (om * om);
            };
            return num::integrate_adaptive(integrand, 0.0, 1.0 - 1e-12, 1e-12);
        }
        case FamilyKind::Weibull:
            return num::reg_gamma_upper(1.0 + 1.0 / rnd.shape,
                                        std::pow(s / rnd.scale1, rnd.shape));
        case FamilyKind::InverseWeibull:
            return num::reg_gamma_lower(1.0 - 1.0 / rnd.shape,
                                        std::pow(rnd.scale1 / s, rnd.shape));
    }
    throw std::invalid_argument("truncated_mean1: unknown family");
}

double c1(const StandardizedRND& rnd, double s) {
    if (s < 0.0) throw std::invalid_argument("c1: s must be >= 0");
    if (s == 0.0) return 1.0;
    return truncated_mean1(rnd, s) - s * sf1(rnd, s);
}

double call_price(const StandardizedRND& rnd, const heston::MarketContext& ctx,
                  double strike) {
    if (!(strike > 0.0)) throw std::invalid_argument("call_price: strike must be > 0");
    ctx.validate();
    const double mu = ctx.forward();
    const double s = strike / mu;
    return ctx.spot * std::exp(-ctx.dividend * ctx.tau) * truncated_mean1(rnd, s) -
           strike * std::exp(-ctx.rate * ctx.tau) * sf1(rnd, s);
}

MomentSummary moments(FamilyKind kind, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("moments: nu must be > 0");
    switch (kind) {
        case FamilyKind::Gamma:
            return {2.0 * nu, 6.0 * nu * nu};
        case FamilyKind::InverseGaussian:
            return {3.0 * nu, 15.0 * nu * nu};
        case FamilyKind::LogNormal: {
            const double w = std::exp(nu * nu);
            return {(w + 2.0) * std::sqrt(w - 1.0),
                    w * w * w * w + 2.0 * w * w * w + 3.0 * w * w - 6.0};
        }
        case FamilyKind::Weibull: {
            const double xi = solve_weibull_shape(nu);
            const double h1 = h_moment(1, xi), h2 = h_moment(2, xi),
                         h3 = h_moment(3, xi), h4 = h_moment(4, xi);
            const double var = h2 - h1 * h1;
            const double skew = (h3 - 3.0 * h2 * h1 + 2.0 * h1 * h1 * h1) / std::pow(var, 1.5);
            const double kurt =
                (h4 - 4.0 * h3 * h1 + 6.0 * h2 * h1 * h1 - 3.0 * h1 * h1 * h1 * h1) /
                (var * var);
            return {skew, kurt - 3.0};
        }
        case FamilyKind::InverseWeibull: {
            const double xi = solve_inv_weibull_shape(nu);
            if (!(xi > 4.0))
                throw std::runtime_error(
                    "moments: Inverse-Weibull shape <= 4, fourth moment does not exist");
            const double h1 = h_moment_inv(1, xi), h2 = h_moment_inv(2, xi),
                         h3 = h_moment_inv(3, xi), h4 = h_moment_inv(4, xi);
            const double var = h2 - h1 * h1;
            const double skew = (h3 - 3.0 * h2 * h1 + 2.0 * h1 * h1 * h1) / std::pow(var, 1.5);
            const double kurt =
                (h4 - 4.0 * h3 * h1 + 6.0 * h2 * h1 * h1 - 3.0 * h1 * h1 * h1 * h1) /
                (var * var);
            return {skew, kurt - 3.0};
        }
    }
    throw std::invalid_argument("moments: unknown family");
}

}  // namespace hestonrnd::scale_rnd
