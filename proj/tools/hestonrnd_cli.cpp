// Command-line front end: price / rnd / simulate / calibrate / compare.
//
// Chain files are self-contained CSVs with #key=value metadata headers;
// model parameters are passed as repeated --param name=value flags.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hestonrnd/calibration.hpp"
#include "hestonrnd/chain_io.hpp"
#include "hestonrnd/heston.hpp"
#include "hestonrnd/montecarlo.hpp"
#include "hestonrnd/scale_rnd.hpp"

namespace hr = hestonrnd;
using json = nlohmann::json;

namespace {

struct CommonOpts {
    std::string chain_path;
    std::vector<std::string> params;  // name=value overrides
    std::string model = "heston";
    std::string output;

    // Market context when no chain file supplies it.
    std::optional<double> spot, rate, dividend, tau_days;
    std::optional<double> nu;
};

std::map<std::string, double> parse_overrides(const std::vector<std::string>& raw) {
    std::map<std::string, double> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected name=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        try {
            out[key] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--param", "bad value in '" + item + "'");
        }
    }
    return out;
}

struct Resolved {
    hr::heston::MarketContext ctx;
    hr::heston::HestonParams heston;
    std::optional<hr::calibration::OptionChain> chain;
    double nu = 0.0;
};

Resolved resolve(const CommonOpts& opts, std::ostream& diag) {
    Resolved r;
    r.ctx = {1.0, 0.0, 0.0, 0.0};  // overwritten by chain metadata / flags
    if (!opts.chain_path.empty()) {
        auto ingest = hr::chain_io::ingest_chain(opts.chain_path);
        for (const auto& w : ingest.warnings) diag << "warning: " << w << '\n';
        r.ctx = ingest.chain.ctx;
        r.heston.v0 = ingest.chain.v0_hint;
        r.chain = std::move(ingest.chain);
    }
    if (opts.spot) r.ctx.spot = *opts.spot;
    if (opts.rate) r.ctx.rate = *opts.rate;
    if (opts.dividend) r.ctx.dividend = *opts.dividend;
    if (opts.tau_days) r.ctx.tau = *opts.tau_days / 365.0;

    // Heston defaults: the conventional calibration starting point.
    r.heston.kappa = 2.0;
    r.heston.theta = 0.5;
    r.heston.eta = 0.6;
    r.heston.rho = 0.0;
    if (r.chain) r.heston.v0 = r.chain->v0_hint;

    const auto overrides = parse_overrides(opts.params);
    for (const auto& [key, value] : overrides) {
        if (key == "kappa") r.heston.kappa = value;
        else if (key == "theta") r.heston.theta = value;
        else if (key == "eta") r.heston.eta = value;
        else if (key == "rho") r.heston.rho = value;
        else if (key == "v0") r.heston.v0 = value;
        else throw CLI::ValidationError("--param", "unknown parameter '" + key + "'");
    }
    if (opts.nu) {
        r.nu = *opts.nu;
    } else if (r.chain && opts.model != "heston") {
        const double sigma = hr::calibration::fit_bs_iv(*r.chain);
        r.nu = sigma * std::sqrt(r.ctx.tau);
        diag << "note: --nu not given, fitted nu=" << r.nu << " from the chain\n";
    }
    return r;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

// Streams either to --output or to stdout.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) file_ = open_output(path);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::optional<std::ofstream> file_;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HESTONRND_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

int run_price(const CommonOpts& opts, double strike) {
    const Resolved r = resolve(opts, std::cerr);
    double price;
    if (opts.model == "heston") {
        price = hr::heston::call_price(strike, r.heston, r.ctx);
    } else {
        const auto kind = hr::scale_rnd::kind_from_name(opts.model);
        if (!(r.nu > 0.0))
            throw CLI::ValidationError("--nu", "scale-family models need --nu > 0 or a chain");
        const auto rnd = hr::scale_rnd::make_standardized(kind, r.nu);
        price = hr::scale_rnd::call_price(rnd, r.ctx, strike);
    }
    OutputTarget out(opts.output);
    out.stream() << std::setprecision(6) << price << '\n';
    return 0;
}

int run_rnd(const CommonOpts& opts, double umin, double umax, int points) {
    if (!(umin > 0.0) || !(umax > umin) || points < 2)
        throw CLI::ValidationError("--umin/--umax/--points", "need 0 < umin < umax, points >= 2");
    const Resolved r = resolve(opts, std::cerr);

    std::optional<hr::scale_rnd::StandardizedRND> family;
    if (opts.model != "heston") {
        if (!(r.nu > 0.0))
            throw CLI::ValidationError("--nu", "scale-family models need --nu > 0 or a chain");
        family = hr::scale_rnd::make_standardized(
            hr::scale_rnd::kind_from_name(opts.model), r.nu);
    }

    OutputTarget out(opts.output);
    out.stream() << "u,density\n" << std::setprecision(6);
    for (int i = 0; i < points; ++i) {
        const double u = umin + (umax - umin) * i / (points - 1);
        const double dens = family
                                ? hr::scale_rnd::pdf1(*family, u)
                                : hr::heston::rnd_density(u, 2, r.heston, r.ctx);
        out.stream() << u << ',' << dens << '\n';
    }
    return 0;
}

int run_simulate(const CommonOpts& opts, hr::montecarlo::SimConfig cfg,
                 const std::string& summary_path) {
    const Resolved r = resolve(opts, std::cerr);
    const auto samples = hr::montecarlo::simulate(r.heston, r.ctx, cfg);
    const auto stats = hr::montecarlo::summary(samples);

    if (!opts.output.empty()) {
        auto out = open_output(opts.output);
        out << std::setprecision(6);
        hr::montecarlo::write_samples_csv(samples, out);
    }

    json j{{"paths", samples.config_echo.paths},
           {"steps", samples.config_echo.steps},
           {"seed", samples.config_echo.seed},
           {"scheme", hr::montecarlo::scheme_name(samples.config_echo.scheme)},
           {"mean", stats.mean},
           {"sd", stats.sd}};
    if (std::isfinite(stats.skewness)) {
        j["skewness"] = stats.skewness;
        j["excess_kurtosis"] = stats.excess_kurtosis;
    }
    OutputTarget out(summary_path);
    out.stream() << j.dump(2) << '\n';
    return 0;
}

int run_calibrate(const CommonOpts& opts) {
    const Resolved r = resolve(opts, std::cerr);
    if (!r.chain) throw CLI::ValidationError("--chain", "calibrate needs a chain file");
    const auto result = hr::calibration::calibrate_heston(*r.chain, r.heston);
    json j{{"kappa", result.params.kappa},
           {"theta", result.params.theta},
           {"eta", result.params.eta},
           {"rho", result.params.rho},
           {"v0", result.params.v0},
           {"mse", result.mse},
           {"iterations", result.iterations},
           {"converged", result.converged}};
    OutputTarget out(opts.output);
    out.stream() << j.dump(2) << '\n';
    return 0;
}

int run_compare(const CommonOpts& opts, const std::vector<std::string>& family_names) {
    const Resolved r = resolve(opts, std::cerr);
    if (!r.chain) throw CLI::ValidationError("--chain", "compare needs a chain file");
    double nu = r.nu;
    if (!(nu > 0.0)) {
        const double sigma = hr::calibration::fit_bs_iv(*r.chain);
        nu = sigma * std::sqrt(r.ctx.tau);
        std::cerr << "note: --nu not given, fitted nu=" << nu << " from the chain\n";
    }
    std::vector<hr::scale_rnd::FamilyKind> kinds;
    for (const auto& name : family_names)
        kinds.push_back(hr::scale_rnd::kind_from_name(name));
    const auto table = hr::calibration::compare_models(*r.chain, r.heston, nu, kinds);
    OutputTarget out(opts.output);
    hr::calibration::write_comparison_csv(table, out.stream());
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_model = true) {
    cmd->add_option("--chain", opts.chain_path, "Chain CSV with #key=value headers");
    cmd->add_option("--param", opts.params,
                    "Model parameter override, name=value (kappa, theta, eta, rho, v0)");
    if (with_model)
        cmd->add_option("--model", opts.model,
                        "heston | lognormal | gamma | invgauss | weibull | invweibull");
    cmd->add_option("--output,-o", opts.output, "Output file (default stdout)");
    cmd->add_option("--spot", opts.spot, "Spot price");
    cmd->add_option("--rate", opts.rate, "Risk-free rate (cc)");
    cmd->add_option("--dividend", opts.dividend, "Dividend yield (cc)");
    cmd->add_option("--tau-days", opts.tau_days, "Days to expiry");
    cmd->add_option("--nu", opts.nu, "Scale-family dispersion (sigma * sqrt(t))");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heston risk-neutral density toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional key=value config file; flags win");

    CommonOpts price_opts, rnd_opts, sim_opts, cal_opts, cmp_opts;
    double strike = 0.0;
    double umin = 0.4, umax = 1.6;
    int points = 601;
    hr::montecarlo::SimConfig sim_cfg;
    sim_cfg.seed = default_seed();
    std::string scheme = "auto";
    std::string summary_path;
    std::vector<std::string> families{"gamma", "invgauss", "lognormal"};

    auto* price = app.add_subcommand("price", "Price a European call");
    add_common(price, price_opts);
    price->add_option("--strike,-K", strike, "Strike")->required();

    auto* rnd = app.add_subcommand("rnd", "Standardized risk-neutral density grid");
    add_common(rnd, rnd_opts);
    rnd->add_option("--umin", umin, "Grid lower end");
    rnd->add_option("--umax", umax, "Grid upper end");
    rnd->add_option("--points", points, "Grid points");

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo terminal samples");
    add_common(simulate, sim_opts, /*with_model=*/false);
    simulate->add_option("--paths", sim_cfg.paths, "Number of paths");
    simulate->add_option("--steps", sim_cfg.steps, "Steps per path (0 = default)");
    simulate->add_option("--seed", sim_cfg.seed, "RNG seed (default $HESTONRND_SEED)");
    simulate->add_option("--scheme", scheme, "auto | milstein | alfonsi");
    simulate->add_option("--summary", summary_path, "Summary JSON file (default stdout)");

    auto* calibrate = app.add_subcommand("calibrate", "Fit Heston parameters to a chain");
    add_common(calibrate, cal_opts, /*with_model=*/false);

    auto* compare = app.add_subcommand("compare", "Model-comparison price table");
    add_common(compare, cmp_opts, /*with_model=*/false);
    compare->add_option("--families", families, "Scale families to include")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
    }

    try {
        if (*price) return run_price(price_opts, strike);
        if (*rnd) return run_rnd(rnd_opts, umin, umax, points);
        if (*simulate) {
            if (scheme == "auto") sim_cfg.scheme = hr::montecarlo::Scheme::Auto;
            else if (scheme == "milstein") sim_cfg.scheme = hr::montecarlo::Scheme::MilsteinReflect;
            else if (scheme == "alfonsi") sim_cfg.scheme = hr::montecarlo::Scheme::AlfonsiImplicit;
            else throw CLI::ValidationError("--scheme", "unknown scheme '" + scheme + "'");
            return run_simulate(sim_opts, sim_cfg, summary_path);
        }
        if (*calibrate) return run_calibrate(cal_opts);
        if (*compare) return run_compare(cmp_opts, families);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
