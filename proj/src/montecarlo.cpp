#include "hestonrnd/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hestonrnd::montecarlo {

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::Auto: return "auto";
        case Scheme::MilsteinReflect: return "milstein-reflect";
        case Scheme::AlfonsiImplicit: return "alfonsi-implicit";
    }
    throw std::invalid_argument("scheme_name: unknown scheme");
}

void SimConfig::validate() const {
    if (paths < 1) throw std::invalid_argument("SimConfig: paths must be >= 1");
    if (steps < 0) throw std::invalid_argument("SimConfig: steps must be >= 0");
}

int default_steps(double tau) {
    return std::max(static_cast<int>(std::ceil(250.0 * tau)), 50);
}

double milstein_reflect_step(double v, double dt, double z,
                             const heston::HestonParams& params) {
    const double drift = params.kappa * (params.theta - v) * dt;
    const double diff = params.eta * std::sqrt(v * dt) * z;
    const double correction = 0.25 * params.eta * params.eta * (z * z - 1.0) * dt;
    return std::fabs(v + drift + diff + correction);
}

double alfonsi_step(double v, double dt, double z,
                    const heston::HestonParams& params) {
    // Drift-implicit scheme on X = sqrt(V): solve the quadratic
    //   (1 + kappa dt/2) X^2 - b X - c = 0,  b = X_k + (eta/2) z sqrt(dt),
    //   c = (kappa theta - eta^2/4) dt / 2,
    // and take the nonnegative root. c >= 0 iff kappa theta >= eta^2/4,
    // which keeps the discriminant nonnegative for every draw.
    const double a = 1.0 + 0.5 * params.kappa * dt;
    const double b = std::sqrt(v) + 0.5 * params.eta * z * std::sqrt(dt);
    const double c = 0.5 * (params.kappa * params.theta - 0.25 * params.eta * params.eta) * dt;
    const double disc = b * b + 4.0 * a * c;
    if (disc < 0.0)
        throw std::runtime_error(
            "alfonsi_step: negative discriminant (kappa*theta < eta^2/4)");
    const double x = (b + std::sqrt(disc)) / (2.0 * a);
    if (x < 0.0)
        throw std::runtime_error(
            "alfonsi_step: no nonnegative root (kappa*theta < eta^2/4)");
    return x * x;
}

Scheme resolve_scheme(Scheme requested, const heston::HestonParams& params) {
    const double quarter_eta2 = 0.25 * params.eta * params.eta;
    switch (requested) {
        case Scheme::Auto:
            return heston::feller_ratio(params) > 1.0 ? Scheme::AlfonsiImplicit
                                                      : Scheme::MilsteinReflect;
        case Scheme::AlfonsiImplicit:
            // Outside its validity region the implicit root can fail; fall
            // back instead of aborting mid-path.
            return params.kappa * params.theta >= quarter_eta2
                       ? Scheme::AlfonsiImplicit
                       : Scheme::MilsteinReflect;
        case Scheme::MilsteinReflect:
            return Scheme::MilsteinReflect;
    }
    throw std::invalid_argument("resolve_scheme: unknown scheme");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d65ab9d695aa1dULL;
    return x ^ (x >> 31);
}

}  // namespace

SampleSet simulate(const heston::HestonParams& params,
                   const heston::MarketContext& ctx, const SimConfig& cfg) {
    params.validate();
    ctx.validate();
    cfg.validate();

    SimConfig resolved = cfg;
    if (resolved.steps == 0) resolved.steps = default_steps(ctx.tau);
    resolved.scheme = resolve_scheme(cfg.scheme, params);

    const int n = resolved.steps;
    const double dt = ctx.tau / n;
    const double sdt = std::sqrt(dt);
    const double rho = params.rho;
    const double rho_perp = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const bool use_alfonsi = resolved.scheme == Scheme::AlfonsiImplicit;

    SampleSet out;
    out.config_echo = resolved;
    out.s_star.resize(resolved.paths);
    out.v_t.resize(resolved.paths);

    for (int path = 0; path < resolved.paths; ++path) {
        // Per-path stream keyed by (seed, path): determinism does not
        // depend on how paths would be distributed across workers.
        std::mt19937_64 rng(splitmix64(resolved.seed ^ splitmix64(path + 1)));
        std::normal_distribution<double> normal(0.0, 1.0);

        double v = params.v0;
        double log_s = 0.0;  // log of S_T / mu: the (r - q) drift cancels
        for (int k = 0; k < n; ++k) {
            const double z2 = normal(rng);
            const double zp = normal(rng);
            const double z1 = rho * z2 + rho_perp * zp;
            log_s += -0.5 * v * dt + std::sqrt(v) * sdt * z1;
            v = use_alfonsi ? alfonsi_step(v, dt, z2, params)
                            : milstein_reflect_step(v, dt, z2, params);
        }
        out.s_star[path] = std::exp(log_s);
        out.v_t[path] = v;
    }
    return out;
}

SummaryStats summary(const SampleSet& samples, int bins) {
    const std::size_t m = samples.s_star.size();
    if (m == 0) throw std::invalid_argument("summary: empty sample");
    if (bins < 1) throw std::invalid_argument("summary: bins must be >= 1");

    double mean = 0.0;
    for (double x : samples.s_star) mean += x;
    mean /= static_cast<double>(m);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : samples.s_star) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SummaryStats st{};
    st.mean = mean;
    st.sd = m > 1 ? std::sqrt(m2 / static_cast<double>(m - 1)) : 0.0;
    if (m2 > 0.0) {
        const double s2 = m2 / static_cast<double>(m);
        st.skewness = (m3 / static_cast<double>(m)) / std::pow(s2, 1.5);
        st.excess_kurtosis = (m4 / static_cast<double>(m)) / (s2 * s2) - 3.0;
    } else {
        st.skewness = nan;
        st.excess_kurtosis = nan;
    }

    const auto [lo_it, hi_it] =
        std::minmax_element(samples.s_star.begin(), samples.s_star.end());
    st.histogram.lo = *lo_it;
    st.histogram.hi = *hi_it;
    st.histogram.counts.assign(bins, 0);
    const double width = st.histogram.hi - st.histogram.lo;
    for (double x : samples.s_star) {
        int b = width > 0.0
                    ? static_cast<int>((x - st.histogram.lo) / width * bins)
                    : 0;
        if (b >= bins) b = bins - 1;
        ++st.histogram.counts[b];
    }
    return st;
}

void write_samples_csv(const SampleSet& samples, std::ostream& out) {
    out << "s_star,v_t\n";
    for (std::size_t i = 0; i < samples.s_star.size(); ++i)
        out << samples.s_star[i] << ',' << samples.v_t[i] << '\n';
}

}  // namespace hestonrnd::montecarlo
