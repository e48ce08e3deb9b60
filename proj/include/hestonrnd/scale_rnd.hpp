#pragma once

#include <string>

#include "hestonrnd/heston.hpp"
#include "hestonrnd/numerics.hpp"

namespace hestonrnd::scale_rnd {

enum class FamilyKind { LogNormal, Gamma, InverseGaussian, Weibull, InverseWeibull };

const char* kind_name(FamilyKind kind);
FamilyKind kind_from_name(const std::string& name);

/// A mean-1 member of one of the five scale families, parametrized by the
/// single dispersion parameter nu (= sigma * sqrt(t)). `shape` and `scale1`
/// hold the family-resolved parameters (e.g. the Weibull shape solved from
/// the moment-ratio equation and its scale 1/h1).
struct StandardizedRND {
    FamilyKind kind;
    double nu;
    double shape;
    double scale1;
};

/// Builds the standardized family member for the given nu > 0. The
/// Weibull / Inverse-Weibull shapes are solved by bracketed root finding
/// on the moment-ratio residual.
StandardizedRND make_standardized(FamilyKind kind, double nu);

/// cdf Q1(u) of the standardized variable.
double cdf1(const StandardizedRND& std_rnd, double u);

/// Survival function 1 - Q1(u), computed without the cancellation a
/// naive complement suffers deep in the right tail.
double sf1(const StandardizedRND& std_rnd, double u);

/// pdf q1(u) of the standardized variable.
double pdf1(const StandardizedRND& std_rnd, double u);

/// Truncated mean Delta1(s) = integral_s^inf u q1(u) du.
/// Closed form for all kinds except Inverse-Gaussian, which is integrated
/// numerically.
double truncated_mean1(const StandardizedRND& std_rnd, double s);

/// Undiscounted standardized option value c1(s) = Delta1(s) - s (1 - Q1(s)).
double c1(const StandardizedRND& std_rnd, double s);

/// Call price under this family used as the risk-neutral density:
/// S e^{-q tau} Delta1(K/mu) - K e^{-r tau} (1 - Q1(K/mu)),
/// with mu = S e^{(r-q) tau}.
double call_price(const StandardizedRND& std_rnd, const heston::MarketContext& ctx,
                  double strike);

struct MomentSummary {
    double skewness;
    double excess_kurtosis;
};

/// Skewness and excess kurtosis of the family at dispersion nu. For the
/// Inverse-Weibull the solved shape must exceed 4 or the fourth moment
/// does not exist.
MomentSummary moments(FamilyKind kind, double nu);

/// The standardized family re-scaled by mu; Q_mu(x) = Q1(x/mu).
struct ScaledRND {
    StandardizedRND std_rnd;
    double mu;

    double cdf(double x) const { return cdf1(std_rnd, x / mu); }
    double pdf(double x) const { return pdf1(std_rnd, x / mu) / mu; }
};

}  // namespace hestonrnd::scale_rnd
