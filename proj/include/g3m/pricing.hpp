#pragma once

#include <span>
#include <vector>

#include "g3m/market.hpp"
#include "g3m/schedule.hpp"

namespace g3m {

// Instantaneous log-drift gap between the constant-weight LP and the
// constant-mix benchmark:
//   (1/2) [ sum_i s_i^2 (w_i^2 - w_i) + sum_{i!=j} s_i s_j rho_ij w_i w_j ].
double eta_rate(std::span<const double> weights, const MarketParams& params);

// eta over a horizon tau; the LP share price is G(t) e^eta. Nonpositive
// whenever all correlations are nonnegative.
double eta_constant(std::span<const double> weights, const MarketParams& params,
                    double tau);

// Algebraically identical pairwise form:
//   -(tau/2) sum_{i<j} (s_i^2 + s_j^2 - 2 s_i s_j rho_ij) w_i w_j.
double eta_pairwise(std::span<const double> weights, const MarketParams& params,
                    double tau);

// Two-asset equal-weight special case, -sigma_r^2 tau / 8.
double eta_uniswap(double sigma_a, double sigma_b, double rho, double tau);

// No-arbitrage LP share price g_t e^eta.
double lp_price_constant(double g_t, double eta);

// Price of the frictionless constant-mix benchmark with the same weights;
// equals g_t (its discounted value is a martingale), computed as
// e^{-eta} * lp_price_constant to expose the LP/constant-mix ratio e^eta.
double constant_mix_value(double g_t, double eta);

// eta(t,T) for a deterministic schedule: composite midpoint quadrature of
// eta_rate(w(s)) over [t,T] with quad_steps panels.
double eta_time_varying(const WeightSchedule& schedule, const MarketParams& params,
                        double t, double T, int quad_steps);

struct Greeks {
    double delta;  // w_i f / s_i, nonnegative
    double gamma;  // w_i (w_i - 1) f / s_i^2, nonpositive
};

// Partial derivatives of the LP share price with respect to one asset
// price, holding the invariant and the other prices fixed.
Greeks lp_greeks(double f, double w_i, double s_i);

struct EtaReport {
    double eta;
    double lp_price;
    double constant_mix_value;
    double horizon;
};

EtaReport make_eta_report(double g_t, std::span<const double> weights,
                          const MarketParams& params, double tau);

struct SurfacePoint {
    double w;    // weight of asset a
    double x;    // correlation or sigma_a, depending on the axis
    double eta;
};

enum class EtaSurfaceAxis { correlation, volatility };

// Two-asset eta surface over a weight grid crossed with either a
// correlation grid (sigma_a, sigma_b fixed) or a sigma_a grid (rho = 0).
// Rows are emitted in row-major order, x varying fastest.
std::vector<SurfacePoint> eta_surface(double sigma_a, double sigma_b,
                                      std::span<const double> x_grid,
                                      std::span<const double> w_grid, double tau,
                                      EtaSurfaceAxis axis = EtaSurfaceAxis::correlation);

}  // namespace g3m
