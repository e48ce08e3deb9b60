#include "hestonrnd/calibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <stdexcept>

namespace hestonrnd::calibration {

namespace num = hestonrnd::numerics;

void OptionQuote::validate() const {
    if (!(strike > 0.0)) throw std::invalid_argument("OptionQuote: strike must be > 0");
    if (!(mid >= 0.0)) throw std::invalid_argument("OptionQuote: mid must be >= 0");
}

void OptionChain::validate() const {
    if (quotes.empty()) throw std::invalid_argument("OptionChain: no quotes");
    ctx.validate();
    if (!(v0_hint >= 0.0)) throw std::invalid_argument("OptionChain: v0_hint must be >= 0");
    for (std::size_t i = 0; i < quotes.size(); ++i) {
        quotes[i].validate();
        if (i > 0 && !(quotes[i].strike > quotes[i - 1].strike))
            throw std::invalid_argument(
                "OptionChain: strikes must be strictly increasing");
    }
}

std::vector<std::size_t> OptionChain::monotonicity_warnings(double tol) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < quotes.size(); ++i)
        if (quotes[i].mid > quotes[i - 1].mid + tol) out.push_back(i);
    return out;
}

double mse(const std::vector<double>& model_prices, const OptionChain& chain) {
    if (model_prices.size() != chain.quotes.size())
        throw std::invalid_argument("mse: price/quote length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < model_prices.size(); ++i) {
        const double e = model_prices[i] - chain.quotes[i].mid;
        acc += e * e;
    }
    return acc / static_cast<double>(model_prices.size());
}

std::vector<double> heston_prices(const heston::HestonParams& params,
                                  const OptionChain& chain) {
    std::vector<double> out;
    out.reserve(chain.quotes.size());
    for (const auto& q : chain.quotes)
        out.push_back(heston::call_price(q.strike, params, chain.ctx));
    return out;
}

double bs_call(double strike, double sigma, const heston::MarketContext& ctx) {
    if (!(strike > 0.0)) throw std::invalid_argument("bs_call: strike must be > 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("bs_call: sigma must be > 0");
    ctx.validate();
    const double nu = sigma * std::sqrt(ctx.tau);
    const double d1 = (std::log(ctx.forward() / strike) + 0.5 * nu * nu) / nu;
    return ctx.spot * std::exp(-ctx.dividend * ctx.tau) * num::norm_cdf(d1) -
           strike * std::exp(-ctx.rate * ctx.tau) * num::norm_cdf(d1 - nu);
}

void CalibSpec::validate() const {
    if (max_iterations < 1)
        throw std::invalid_argument("CalibSpec: max_iterations must be >= 1");
    if (!(spread_tol > 0.0))
        throw std::invalid_argument("CalibSpec: spread_tol must be > 0");
    if (restarts < 0) throw std::invalid_argument("CalibSpec: restarts must be >= 0");
}

namespace {

using Point = std::array<double, 4>;

Point to_unconstrained(const heston::HestonParams& p) {
    return {std::log(p.kappa), std::log(p.theta), std::log(p.eta), std::atanh(p.rho)};
}

heston::HestonParams from_unconstrained(const Point& x, double v0) {
    return {std::exp(x[0]), std::exp(x[1]), std::exp(x[2]), std::tanh(x[3]), v0};
}

struct NmOutcome {
    Point best;
    double value;
    int iterations;
    bool converged;
};

// Standard Nelder-Mead simplex (reflect 1, expand 2, contract 0.5,
// shrink 0.5) over R^4.
NmOutcome nelder_mead(const std::function<double(const Point&)>& f,
                      const Point& start, int max_iter, double spread_tol) {
    constexpr int n = 4;
    std::array<Point, n + 1> simplex;
    std::array<double, n + 1> fval;
    simplex[0] = start;
    for (int i = 0; i < n; ++i) {
        simplex[i + 1] = start;
        simplex[i + 1][i] += (start[i] != 0.0) ? 0.05 * std::fabs(start[i]) : 0.1;
    }
    for (int i = 0; i <= n; ++i) fval[i] = f(simplex[i]);

    auto order = [&] {
        std::array<int, n + 1> idx;
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return fval[a] < fval[b]; });
        std::array<Point, n + 1> sp;
        std::array<double, n + 1> fv;
        for (int i = 0; i <= n; ++i) {
            sp[i] = simplex[idx[i]];
            fv[i] = fval[idx[i]];
        }
        simplex = sp;
        fval = fv;
    };

    int iter = 0;
    bool converged = false;
    for (; iter < max_iter; ++iter) {
        order();
        if (fval[n] - fval[0] < spread_tol) {
            converged = true;
            break;
        }
        Point centroid{};
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d] / n;

        auto blend = [&](double coef) {
            Point p;
            for (int d = 0; d < n; ++d)
                p[d] = centroid[d] + coef * (centroid[d] - simplex[n][d]);
            return p;
        };

        const Point refl = blend(1.0);
        const double f_refl = f(refl);
        if (f_refl < fval[0]) {
            const Point expd = blend(2.0);
            const double f_expd = f(expd);
            if (f_expd < f_refl) {
                simplex[n] = expd;
                fval[n] = f_expd;
            } else {
                simplex[n] = refl;
                fval[n] = f_refl;
            }
        } else if (f_refl < fval[n - 1]) {
            simplex[n] = refl;
            fval[n] = f_refl;
        } else {
            const bool outside = f_refl < fval[n];
            const Point contr = blend(outside ? 0.5 : -0.5);
            const double f_contr = f(contr);
            if (f_contr < (outside ? f_refl : fval[n])) {
                simplex[n] = contr;
                fval[n] = f_contr;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int d = 0; d < n; ++d)
                        simplex[i][d] = simplex[0][d] + 0.5 * (simplex[i][d] - simplex[0][d]);
                    fval[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return {simplex[0], fval[0], iter, converged};
}

// Golden-section minimization of a unimodal scalar function on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

CalibResult calibrate_heston(const OptionChain& chain,
                             const heston::HestonParams& init,
                             const CalibSpec& spec) {
    chain.validate();
    init.validate();
    spec.validate();
    const double v0 = init.v0;

    auto objective = [&](const Point& x) {
        const heston::HestonParams p = from_unconstrained(x, v0);
        try {
            return mse(heston_prices(p, chain), chain);
        } catch (const std::runtime_error&) {
            // Pathological corner of the search space: steer the simplex away.
            return 1e10;
        }
    };

    Point start = to_unconstrained(init);
    NmOutcome best{start, objective(start), 0, false};
    int total_iter = 0;
    for (int run = 0; run <= spec.restarts; ++run) {
        const NmOutcome out =
            nelder_mead(objective, best.best, spec.max_iterations, spec.spread_tol);
        total_iter += out.iterations;
        if (out.value <= best.value)
            best = {out.best, out.value, 0, out.converged};
        else
            best.converged = out.converged;
    }

    CalibResult result;
    result.params = from_unconstrained(best.best, v0);
    result.mse = best.value;
    result.iterations = total_iter;
    result.converged = best.converged;
    return result;
}

double fit_bs_iv(const OptionChain& chain) {
    chain.validate();
    auto objective = [&](double sigma) {
        std::vector<double> prices;
        prices.reserve(chain.quotes.size());
        for (const auto& q : chain.quotes)
            prices.push_back(bs_call(q.strike, sigma, chain.ctx));
        return mse(prices, chain);
    };
    const double sigma = golden_min(objective, 1e-4, 5.0, 1e-8);
    if (!(sigma > 1e-4))
        throw std::runtime_error("fit_bs_iv: optimization collapsed to the boundary");
    return sigma;
}

ComparisonTable compare_models(const OptionChain& chain,
                               const heston::HestonParams& theta_hat,
                               double nu_hat,
                               const std::vector<scale_rnd::FamilyKind>& kinds) {
    chain.validate();
    theta_hat.validate();

    ComparisonTable table;
    table.strikes.reserve(chain.quotes.size());
    table.market.reserve(chain.quotes.size());
    for (const auto& q : chain.quotes) {
        table.strikes.push_back(q.strike);
        table.market.push_back(q.mid);
    }

    table.model_names.push_back("Heston");
    table.prices.push_back(heston_prices(theta_hat, chain));

    for (const auto kind : kinds) {
        const auto rnd = scale_rnd::make_standardized(kind, nu_hat);
        std::vector<double> col;
        col.reserve(chain.quotes.size());
        for (const auto& q : chain.quotes)
            col.push_back(scale_rnd::call_price(rnd, chain.ctx, q.strike));
        table.model_names.push_back(scale_rnd::kind_name(kind));
        table.prices.push_back(std::move(col));
    }

    for (const auto& col : table.prices) table.model_mse.push_back(mse(col, chain));
    return table;
}

void write_comparison_csv(const ComparisonTable& table, std::ostream& out) {
    // MSE header row, values aligned under their model columns.
    out << "MSE," << std::setprecision(6);
    for (double v : table.model_mse) out << ',' << v;
    out << '\n';
    out << "strike,market";
    for (const auto& name : table.model_names) out << ',' << name;
    out << '\n';
    out << std::fixed << std::setprecision(3);
    for (std::size_t i = 0; i < table.strikes.size(); ++i) {
        out << table.strikes[i] << ',' << table.market[i];
        for (const auto& col : table.prices) out << ',' << col[i];
        out << '\n';
    }
    out.unsetf(std::ios::fixed);
}

}  // namespace hestonrnd::calibration
