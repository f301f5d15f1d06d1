#include "g3m/pricing.hpp"

#include <cmath>
#include <stdexcept>

#include "g3m/pool.hpp"

namespace g3m {

namespace {

double corr_entry(const MarketParams& p, std::size_t i, std::size_t j) {
    if (p.corr.empty()) return i == j ? 1.0 : 0.0;
    return p.corr[i][j];
}

void check_pricing_inputs(std::span<const double> weights,
                          const MarketParams& params, double tau) {
    validate_weights(weights);
    validate(params);
    if (weights.size() != params.size()) {
        throw std::invalid_argument("eta: weights and market dimensions differ");
    }
    if (!(tau >= 0.0)) throw std::invalid_argument("eta: horizon must be nonnegative");
}

}  // namespace

double eta_rate(std::span<const double> weights, const MarketParams& params) {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double si = params.sigma[i];
        acc += si * si * (weights[i] * weights[i] - weights[i]);
        for (std::size_t j = 0; j < weights.size(); ++j) {
            if (j == i) continue;
            acc += si * params.sigma[j] * corr_entry(params, i, j) * weights[i] * weights[j];
        }
    }
    return 0.5 * acc;
}

double eta_constant(std::span<const double> weights, const MarketParams& params,
                    double tau) {
    check_pricing_inputs(weights, params, tau);
    return eta_rate(weights, params) * tau;
}

double eta_pairwise(std::span<const double> weights, const MarketParams& params,
                    double tau) {
    check_pricing_inputs(weights, params, tau);
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (std::size_t j = i + 1; j < weights.size(); ++j) {
            const double si = params.sigma[i];
            const double sj = params.sigma[j];
            acc += (si * si + sj * sj - 2.0 * si * sj * corr_entry(params, i, j)) *
                   weights[i] * weights[j];
        }
    }
    return -0.5 * tau * acc;
}

double eta_uniswap(double sigma_a, double sigma_b, double rho, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("eta: horizon must be nonnegative");
    const double var = sigma_a * sigma_a + sigma_b * sigma_b - 2.0 * sigma_a * sigma_b * rho;
    return -var * tau / 8.0;
}

double lp_price_constant(double g_t, double eta) {
    if (!(g_t > 0.0)) throw std::invalid_argument("lp_price: payoff must be positive");
    return g_t * std::exp(eta);
}

double constant_mix_value(double g_t, double eta) {
    return std::exp(-eta) * lp_price_constant(g_t, eta);
}

double eta_time_varying(const WeightSchedule& schedule, const MarketParams& params,
                        double t, double T, int quad_steps) {
    if (!schedule.deterministic()) {
        throw std::invalid_argument("eta: schedule must be deterministic in time");
    }
    validate(params);
    if (schedule.size() != params.size()) {
        throw std::invalid_argument("eta: schedule and market dimensions differ");
    }
    if (!(T > t)) throw std::invalid_argument("eta: requires T > t");
    if (quad_steps < 1) throw std::invalid_argument("eta: needs at least one panel");

    const double h = (T - t) / quad_steps;
    double acc = 0.0;
    for (int k = 0; k < quad_steps; ++k) {
        const double mid = t + (k + 0.5) * h;
        acc += eta_rate(schedule.at(mid), params);
    }
    return acc * h;
}

Greeks lp_greeks(double f, double w_i, double s_i) {
    if (!(s_i > 0.0)) throw std::invalid_argument("greeks: price must be positive");
    return Greeks{w_i * f / s_i, w_i * (w_i - 1.0) * f / (s_i * s_i)};
}

EtaReport make_eta_report(double g_t, std::span<const double> weights,
                          const MarketParams& params, double tau) {
    const double eta = eta_constant(weights, params, tau);
    return EtaReport{eta, lp_price_constant(g_t, eta), constant_mix_value(g_t, eta), tau};
}

std::vector<SurfacePoint> eta_surface(double sigma_a, double sigma_b,
                                      std::span<const double> x_grid,
                                      std::span<const double> w_grid, double tau,
                                      EtaSurfaceAxis axis) {
    std::vector<SurfacePoint> rows;
    rows.reserve(x_grid.size() * w_grid.size());
    for (double w : w_grid) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw std::invalid_argument("eta_surface: weight outside [0,1]");
        }
        for (double x : x_grid) {
            MarketParams p;
            p.sigma = {axis == EtaSurfaceAxis::volatility ? x : sigma_a, sigma_b};
            const double rho = axis == EtaSurfaceAxis::correlation ? x : 0.0;
            if (!(rho >= -1.0 && rho <= 1.0)) {
                throw std::invalid_argument("eta_surface: correlation outside [-1,1]");
            }
            p.corr = {{1.0, rho}, {rho, 1.0}};
            rows.push_back({w, x, eta_constant(std::vector<double>{w, 1.0 - w}, p, tau)});
        }
    }
    return rows;
}

}  // namespace g3m
