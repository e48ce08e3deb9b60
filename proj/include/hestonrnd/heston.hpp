#pragma once

#include <complex>

#include "hestonrnd/numerics.hpp"

namespace hestonrnd::heston {

/// Structural parameters of the stochastic-volatility system plus the
/// current (initial) variance.
struct HestonParams {
    double kappa;  // mean-reversion speed
    double theta;  // long-run variance
    double eta;    // vol of vol
    double rho;    // correlation between the two Brownian drivers
    double v0;     // current variance

    void validate() const;
};

/// Market state a contract is priced against.
struct MarketContext {
    double spot;
    double rate;
    double dividend = 0.0;
    double tau;  // remaining time to expiry, years

    void validate() const;

    /// Forward scale mu = spot * exp((rate - dividend) * tau).
    double forward() const;
};

/// Characteristic function psi_j (j = 1 or 2) at real frequency omega,
/// in the trap-safe negative-root formulation so the principal complex
/// log stays continuous in omega.
std::complex<double> char_fn(int j, double omega, const HestonParams& params,
                             const MarketContext& ctx);

/// In-the-money probability P_j(strike) by Fourier inversion.
double prob_in_money(int j, double strike, const HestonParams& params,
                     const MarketContext& ctx,
                     const numerics::QuadratureSpec& spec = {});

/// European call price S e^{-q tau} P1 - K e^{-r tau} P2.
double call_price(double strike, const HestonParams& params,
                  const MarketContext& ctx,
                  const numerics::QuadratureSpec& spec = {});

/// Call delta; identically P1 for this model.
double delta(double strike, const HestonParams& params, const MarketContext& ctx,
             const numerics::QuadratureSpec& spec = {});

/// Density of the standardized terminal spot S* = S_T / mu at u > 0,
/// under the j-th measure component. j = 2 gives the risk-neutral density.
double rnd_density(double u, int j, const HestonParams& params,
                   const MarketContext& ctx,
                   const numerics::QuadratureSpec& spec = {});

/// kappa * theta / eta^2; > 1 keeps the variance path strictly positive.
double feller_ratio(const HestonParams& params);

}  // namespace hestonrnd::heston
