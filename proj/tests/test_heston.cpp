#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hestonrnd/heston.hpp"
#include "refdata.hpp"

using namespace hestonrnd;

TEST_CASE("parameter validation") {
    heston::HestonParams p = refdata::amd_params();
    CHECK_NOTHROW(p.validate());
    p.kappa = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = refdata::amd_params();
    p.rho = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    heston::MarketContext ctx{-1.0, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
}

TEST_CASE("characteristic function basics") {
    const auto p = refdata::amd_params();
    const auto ctx = refdata::amd_ctx();
    // psi_j(0) = 1 for both measure components.
    CHECK(std::abs(heston::char_fn(1, 0.0, p, ctx) - std::complex<double>{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(heston::char_fn(2, 0.0, p, ctx) - std::complex<double>{1.0, 0.0}) < 1e-14);
    // |psi| <= 1 and decays along the real frequency axis.
    CHECK(std::abs(heston::char_fn(2, 5.0, p, ctx)) <= 1.0);
    CHECK(std::abs(heston::char_fn(2, 40.0, p, ctx)) <
          std::abs(heston::char_fn(2, 5.0, p, ctx)));
    CHECK_THROWS_AS(heston::char_fn(3, 1.0, p, ctx), std::invalid_argument);
}

TEST_CASE("AMD fitted parameters reproduce frozen call prices") {
    const auto p = refdata::amd_params();
    const auto ctx = refdata::amd_ctx();
    // Frozen with an independent implementation of the same pricing
    // integrals (cross-checked against a Monte-Carlo price).
    CHECK(heston::call_price(40.0, p, ctx) == doctest::Approx(51.71987).epsilon(2e-6));
    CHECK(heston::call_price(90.0, p, ctx) == doctest::Approx(7.94653).epsilon(2e-5));
    CHECK(heston::call_price(120.0, p, ctx) == doctest::Approx(1.08391).epsilon(2e-5));
    CHECK(heston::call_price(190.0, p, ctx) == doctest::Approx(0.01983).epsilon(5e-4));
    CHECK(heston::prob_in_money(1, 90.0, p, ctx) == doctest::Approx(0.573098).epsilon(2e-5));
    CHECK(heston::prob_in_money(2, 90.0, p, ctx) == doctest::Approx(0.495795).epsilon(2e-5));
}

TEST_CASE("delta equals the first in-the-money probability") {
    const auto p = refdata::sp_params();
    const auto ctx = refdata::sp_ctx();
    CHECK(heston::delta(1.05, p, ctx) ==
          doctest::Approx(heston::prob_in_money(1, 1.05, p, ctx)).epsilon(1e-14));
}

TEST_CASE("price bounds and monotonicity in strike") {
    const auto p = refdata::amd_params();
    const auto ctx = refdata::amd_ctx();
    double prev = heston::call_price(40.0, p, ctx);
    for (double k : {60.0, 80.0, 100.0, 140.0, 180.0}) {
        const double c = heston::call_price(k, p, ctx);
        CHECK(c < prev);
        CHECK(c >= 0.0);
        // European call bounds: (S e^{-qt} - K e^{-rt})^+ <= C <= S e^{-qt}.
        const double intrinsic =
            ctx.spot - k * std::exp(-ctx.rate * ctx.tau);
        CHECK(c >= std::max(0.0, intrinsic) - 1e-8);
        CHECK(c <= ctx.spot + 1e-8);
        prev = c;
    }
    // Deep in the money the option is worth the forward intrinsic value.
    const double k_tiny = 1e-4 * ctx.spot;
    CHECK(heston::call_price(k_tiny, p, ctx) ==
          doctest::Approx(ctx.spot - k_tiny * std::exp(-ctx.rate * ctx.tau))
              .epsilon(1e-7));
}

TEST_CASE("price is homogeneous of degree one in (spot, strike)") {
    const auto p = refdata::odax_params();
    auto ctx = refdata::odax_ctx();
    const double base = heston::call_price(8000.0, p, ctx);
    for (double alpha : {0.5, 2.0, 10.0}) {
        auto scaled = ctx;
        scaled.spot *= alpha;
        const double c = heston::call_price(8000.0 * alpha, p, scaled);
        CHECK(c == doctest::Approx(alpha * base).epsilon(1e-10));
    }
}

TEST_CASE("risk-neutral density integrates to one with unit mean") {
    const auto p = refdata::sp_params();
    const auto ctx = refdata::sp_ctx();
    // Log substitution u = e^x keeps the integrand smooth near zero.
    auto mass = numerics::integrate_adaptive(
        [&](double x) {
            const double u = std::exp(x);
            return heston::rnd_density(u, 2, p, ctx) * u;
        },
        -2.0, 2.0, 1e-10);
    auto mean = numerics::integrate_adaptive(
        [&](double x) {
            const double u = std::exp(x);
            return heston::rnd_density(u, 2, p, ctx) * u * u;
        },
        -2.0, 2.0, 1e-10);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("P2 equals the integrated upper tail of the density") {
    const auto p = refdata::amd_params();
    const auto ctx = refdata::amd_ctx();
    const double strike = 90.0;
    const double s = strike / ctx.forward();
    const double tail = numerics::integrate_adaptive(
        [&](double x) {
            const double u = std::exp(x);
            return heston::rnd_density(u, 2, p, ctx) * u;
        },
        std::log(s), 6.0, 1e-9);
    CHECK(tail == doctest::Approx(heston::prob_in_money(2, strike, p, ctx))
                      .epsilon(1e-6));
}

TEST_CASE("density rejects nonpositive evaluation points") {
    const auto p = refdata::sp_params();
    const auto ctx = refdata::sp_ctx();
    CHECK_THROWS_AS(heston::rnd_density(0.0, 2, p, ctx), std::invalid_argument);
    CHECK_THROWS_AS(heston::rnd_density(1.0, 0, p, ctx), std::invalid_argument);
}

TEST_CASE("feller ratio arithmetic") {
    CHECK(heston::feller_ratio(refdata::odax_params()) ==
          doctest::Approx(1.22136 * 0.06442 / (0.55993 * 0.55993)).epsilon(1e-14));
    CHECK(heston::feller_ratio(refdata::odax_params()) < 1.0);
    const heston::HestonParams strict{2.0, 0.09, 0.3, 0.0, 0.09};
    CHECK(heston::feller_ratio(strict) > 1.0);
}
