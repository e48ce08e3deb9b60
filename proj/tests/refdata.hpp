// Shared reference data for the AMD single-expiry study: the quoted chain,
// reference per-model price columns, fitted parameters, and two further
// fitted Heston parameter sets (S&P 500, ODAX) used across the tests.
#pragma once

#include <array>

#include "hestonrnd/heston.hpp"

namespace refdata {

inline constexpr int kN = 39;

inline constexpr std::array<double, kN> kStrikes = {
    40,   42.5, 45,  47.5, 50,  55,  60,  65,  70,  72.5, 75,  77.5, 80,
    82.5, 85,   87.5, 90,  92.5, 95,  97.5, 100, 105, 110, 115, 120, 125,
    130,  135,  140, 145,  150, 155, 160, 165, 170, 175, 180, 185, 190};

inline constexpr std::array<double, kN> kMarket = {
    51.775, 49.275, 46.775, 44.200, 41.825, 36.875, 31.950, 27.150,
    22.450, 20.200, 17.975, 16.025, 14.050, 12.250, 10.800, 9.275,
    7.925,  6.850,  5.800,  4.925,  4.100,  2.835,  2.065,  1.410,
    1.025,  0.765,  0.605,  0.550,  0.205,  0.265,  0.215,  0.185,
    0.110,  0.135,  0.120,  0.135,  0.095,  0.070,  0.040};

// Reference model prices at the fitted parameters, 3-decimal precision.
inline constexpr std::array<double, kN> kHestonCol = {
    51.720, 49.222, 46.726, 44.231, 41.741, 36.779, 31.869, 27.058,
    22.423, 20.203, 18.070, 16.039, 14.127, 12.349, 10.719, 9.242,
    7.923,  6.760,  5.746,  4.871,  4.120,  2.939,  2.096,  1.498,
    1.075,  0.776,  0.563,  0.411,  0.302,  0.224,  0.167,  0.125,
    0.094,  0.072,  0.055,  0.042,  0.032,  0.025,  0.020};

inline constexpr std::array<double, kN> kGammaCol = {
    51.738, 49.239, 46.741, 44.244, 41.751, 36.783, 31.871, 27.073,
    22.476, 20.285, 18.184, 16.186, 14.302, 12.544, 10.917, 9.428,
    8.077,  6.866,  5.790,  4.844,  4.021,  2.706,  1.766,  1.119,
    0.688,  0.412,  0.240,  0.136,  0.076,  0.041,  0.022,  0.011,
    0.006,  0.003,  0.001,  0.001,  0.000,  0.000,  0.000};

inline constexpr std::array<double, kN> kInvGaussCol = {
    51.737, 49.238, 46.739, 44.240, 41.742, 36.758, 31.816, 26.977,
    22.339, 20.132, 18.022, 16.022, 14.145, 12.399, 10.793, 9.330,
    8.010,  6.830,  5.786,  4.870,  4.073,  2.799,  1.880,  1.237,
    0.798,  0.506,  0.315,  0.194,  0.117,  0.070,  0.042,  0.024,
    0.014,  0.008,  0.005,  0.003,  0.001,  0.001,  0.000};

inline constexpr std::array<double, kN> kBlackScholesCol = {
    51.737, 49.238, 46.739, 44.240, 41.743, 36.762, 31.824, 26.993,
    22.365, 20.164, 18.059, 16.064, 14.190, 12.449, 10.846, 9.385,
    8.066,  6.888,  5.843,  4.927,  4.129,  2.852,  1.928,  1.278,
    0.833,  0.535,  0.338,  0.211,  0.131,  0.080,  0.049,  0.029,
    0.017,  0.010,  0.006,  0.004,  0.002,  0.001,  0.001};

// Reference per-model MSEs against the market column.
inline constexpr double kMseHeston = 0.004410;
inline constexpr double kMseGamma = 0.032725;
inline constexpr double kMseInvGauss = 0.018126;
inline constexpr double kMseBlackScholes = 0.016748;

// Fitted AMD parameters and context.
inline constexpr double kAmdSpot = 91.71;
inline constexpr double kAmdRate = 0.0016;
inline constexpr double kAmdTau = 47.0 / 365.0;
inline constexpr double kAmdV0 = 0.25;
inline constexpr double kAmdIv = 0.550085;   // fitted single BSM volatility
inline constexpr double kAmdNu = 0.1978301;  // = iv * sqrt(tau)

inline hestonrnd::heston::HestonParams amd_params() {
    return {1.38164142, 1.06637168, 1.72832698, 0.07768964, kAmdV0};
}

inline hestonrnd::heston::MarketContext amd_ctx() {
    return {kAmdSpot, kAmdRate, 0.0, kAmdTau};
}

// S&P 500 weekly study (fitted parameters).
inline hestonrnd::heston::HestonParams sp_params() {
    return {1.15, 0.04 / 1.15, 0.39, -0.64, 0.04};
}

inline hestonrnd::heston::MarketContext sp_ctx() {
    return {1.0, 0.02, 0.0, 56.0 / 365.0};
}

inline constexpr double kSpNu = 0.07213028;     // sigma * sqrt(t), direct family fits
inline constexpr double kSpInvNu = 0.07379416;  // dispersion for the inverse families

// ODAX study (fitted parameters).
inline hestonrnd::heston::HestonParams odax_params() {
    return {1.22136, 0.06442, 0.55993, -0.66255, 0.02497};
}

inline hestonrnd::heston::MarketContext odax_ctx() {
    return {7962.31, 0.00207, 0.0, 64.0 / 365.0};
}

}  // namespace refdata
