#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hestonrnd/heston.hpp"
#include "hestonrnd/scale_rnd.hpp"

namespace hestonrnd::calibration {

/// One quoted call: strike and mid price ((bid + ask) / 2).
struct OptionQuote {
    double strike;
    double mid;

    void validate() const;
};

/// A single-expiry chain with the market context it was quoted against
/// and a hint for the (fixed) initial variance.
struct OptionChain {
    std::vector<OptionQuote> quotes;
    heston::MarketContext ctx;
    double v0_hint = 0.0;

    /// Throws on structural violations (empty, unsorted / duplicate
    /// strikes, bad quote fields). Non-monotone mids are legal; use
    /// monotonicity_warnings() to surface them.
    void validate() const;

    /// Indices i where mid[i] exceeds mid[i-1] beyond a small tolerance.
    std::vector<std::size_t> monotonicity_warnings(double tol = 1e-9) const;
};

/// Mean squared pricing error (1/N) sum (model_i - mid_i)^2.
double mse(const std::vector<double>& model_prices, const OptionChain& chain);

/// Heston prices at every strike of the chain.
std::vector<double> heston_prices(const heston::HestonParams& params,
                                  const OptionChain& chain);

/// Black-Scholes-Merton call price (constant volatility sigma).
double bs_call(double strike, double sigma, const heston::MarketContext& ctx);

struct CalibSpec {
    int max_iterations = 2000;
    double spread_tol = 1e-10;  // stop when the simplex MSE spread drops below
    int restarts = 0;           // extra Nelder-Mead runs from the previous optimum

    void validate() const;
};

struct CalibResult {
    heston::HestonParams params;
    double mse = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Fits (kappa, theta, eta, rho) by Nelder-Mead on the unconstrained
/// (log, log, log, atanh) transform; V0 is held at init.v0 throughout.
CalibResult calibrate_heston(const OptionChain& chain,
                             const heston::HestonParams& init,
                             const CalibSpec& spec = {});

/// The single BSM volatility minimizing the chain's MSE.
double fit_bs_iv(const OptionChain& chain);

/// Per-strike price table: market, Heston, then one column per family
/// (each family at dispersion nu_hat), with the per-model MSE header row.
struct ComparisonTable {
    std::vector<std::string> model_names;   // "Heston", then family names
    std::vector<double> model_mse;          // parallel to model_names
    std::vector<double> strikes;
    std::vector<double> market;
    std::vector<std::vector<double>> prices;  // prices[m][i], model m strike i
};

ComparisonTable compare_models(const OptionChain& chain,
                               const heston::HestonParams& theta_hat,
                               double nu_hat,
                               const std::vector<scale_rnd::FamilyKind>& kinds);

/// CSV export: `MSE,<models...>` header then `strike,market,<prices...>`
/// rows with prices at 3 decimals.
void write_comparison_csv(const ComparisonTable& table, std::ostream& out);

}  // namespace hestonrnd::calibration
