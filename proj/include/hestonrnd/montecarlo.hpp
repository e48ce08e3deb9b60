#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "hestonrnd/heston.hpp"

namespace hestonrnd::montecarlo {

enum class Scheme { Auto, MilsteinReflect, AlfonsiImplicit };

const char* scheme_name(Scheme scheme);

/// Simulation controls. `steps` is the number of time steps per path over
/// [0, tau]; 0 requests the default max(ceil(250 tau), 50).
struct SimConfig {
    int paths = 10000;
    int steps = 0;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::Auto;

    void validate() const;
};

/// Default step count for a horizon of tau years.
int default_steps(double tau);

/// Terminal samples of the standardized spot S* = S_T / mu and the
/// terminal variance, one entry per path.
struct SampleSet {
    std::vector<double> s_star;
    std::vector<double> v_t;
    SimConfig config_echo;
};

/// One reflected-Milstein update of the variance process; always >= 0.
double milstein_reflect_step(double v, double dt, double z,
                             const heston::HestonParams& params);

/// One drift-implicit update (quadratic in sqrt(V)); nonnegative by
/// construction. Throws std::runtime_error if the discriminant turns
/// negative, which signals kappa*theta < eta^2/4.
double alfonsi_step(double v, double dt, double z,
                    const heston::HestonParams& params);

/// Scheme actually used for the given parameters: Auto resolves to
/// AlfonsiImplicit when the Feller ratio exceeds 1, else MilsteinReflect;
/// an explicit AlfonsiImplicit request falls back to MilsteinReflect when
/// kappa*theta < eta^2/4 (outside the implicit scheme's validity).
Scheme resolve_scheme(Scheme requested, const heston::HestonParams& params);

/// Simulates `paths` independent paths of the system with correlated
/// Gaussian increments. Deterministic for a given seed: each path draws
/// from its own stream keyed by (seed, path index).
SampleSet simulate(const heston::HestonParams& params,
                   const heston::MarketContext& ctx, const SimConfig& cfg);

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<int> counts;
};

struct SummaryStats {
    double mean;
    double sd;                // n-1 divisor
    double skewness;          // NaN when sd == 0
    double excess_kurtosis;   // NaN when sd == 0
    Histogram histogram;
};

/// Moments and a histogram of s_star. Throws std::invalid_argument on an
/// empty sample; a constant sample yields sd 0 with NaN shape statistics.
SummaryStats summary(const SampleSet& samples, int bins = 50);

/// Writes the samples as CSV with header `s_star,v_t`.
void write_samples_csv(const SampleSet& samples, std::ostream& out);

}  // namespace hestonrnd::montecarlo
