#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "hestonrnd/numerics.hpp"

using namespace hestonrnd::numerics;

TEST_CASE("normal cdf and pdf at tabulated points") {
    CHECK(norm_cdf(0.0) == doctest::Approx(0.5));
    CHECK(norm_cdf(1.959963985) == doctest::Approx(0.975).epsilon(1e-9));
    CHECK(norm_cdf(-1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-12));
    CHECK(norm_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-12));
    CHECK(norm_cdf(-40.0) >= 0.0);
}

TEST_CASE("log normal cdf agrees with direct log in the bulk and stays finite deep in the tail") {
    for (double x : {-5.0, -2.0, 0.0, 1.5}) {
        CHECK(norm_cdf_log(x) == doctest::Approx(std::log(norm_cdf(x))).epsilon(1e-12));
    }
    // Mills-ratio expansion region: compare against the known asymptotic value.
    const double x = -40.0;
    // log Phi(-40) ~ -0.5*1600 - log(40 sqrt(2 pi)) = -804.60846...
    CHECK(norm_cdf_log(x) == doctest::Approx(-804.608442).epsilon(1e-6));
    CHECK(std::isfinite(norm_cdf_log(-200.0)));
}

TEST_CASE("ln_gamma hits factorials, half-integers and the reflection region") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
    CHECK(ln_gamma(0.1) == doctest::Approx(2.2527126517342055).epsilon(1e-12));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.0), std::domain_error);
}

TEST_CASE("regularized lower incomplete gamma") {
    CHECK(reg_gamma_lower(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    CHECK(reg_gamma_lower(2.5, 0.0) == 0.0);
    // Exponential tail: P(1, x) = 1 - e^{-x}.
    CHECK(reg_gamma_lower(1.0, 10.0) == doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-13));
    // chi^2_4 at its mean: P(2, 2) = 1 - 3 e^{-2}.
    CHECK(reg_gamma_lower(2.0, 2.0) ==
          doctest::Approx(1.0 - 3.0 * std::exp(-2.0)).epsilon(1e-12));
    CHECK(reg_gamma_lower(3.0, std::numeric_limits<double>::infinity()) == 1.0);
    // Upper tail without cancellation: Q(1, x) = e^{-x} exactly.
    CHECK(reg_gamma_upper(1.0, 50.0) == doctest::Approx(std::exp(-50.0)).epsilon(1e-12));
    for (double x : {0.5, 2.0, 10.0})
        CHECK(reg_gamma_lower(2.5, x) + reg_gamma_upper(2.5, x) ==
              doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(reg_gamma_lower(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_gamma_lower(1.0, -1.0), std::domain_error);
}

TEST_CASE("brent_root finds bracketed roots") {
    const double r = brent_root([](double x) { return std::cos(x); }, 1.0, 2.0);
    CHECK(r == doctest::Approx(M_PI / 2.0).epsilon(1e-10));
    const double c = brent_root([](double x) { return x * x * x - 2.0; }, 0.0, 2.0);
    CHECK(c == doctest::Approx(std::cbrt(2.0)).epsilon(1e-10));
    CHECK_THROWS_AS(brent_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("adaptive quadrature on finite intervals") {
    CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("semi-infinite quadrature handles decaying and oscillatory-decaying integrands") {
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-0.5 * x * x); }, 0.0) ==
          doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-9));
    // int_0^inf e^{-x} cos(5x) dx = 1 / 26.
    CHECK(integrate_semi_infinite(
              [](double x) { return std::exp(-x) * std::cos(5.0 * x); }, 0.0) ==
          doctest::Approx(1.0 / 26.0).epsilon(1e-8));
}

TEST_CASE("semi-infinite quadrature rejects non-decaying tails") {
    QuadratureSpec spec;
    spec.max_panels = 8;
    CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, 0.0, spec),
                    std::runtime_error);
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec spec;
    CHECK_NOTHROW(spec.validate());
    spec.abs_tol = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.max_panels = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
