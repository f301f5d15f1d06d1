#include "g3m/dynamic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "g3m/csv.hpp"

namespace g3m {

namespace {

std::vector<double> schedule_weights(const WeightSchedule& schedule, double t,
                                     std::span<const double> prices) {
    std::vector<double> w = schedule.deterministic() ? schedule.at(t)
                                                     : schedule.at(t, prices);
    for (double wi : w) {
        if (!(wi > 0.0)) {
            throw std::domain_error("re-weighting requires strictly positive weights");
        }
    }
    return w;
}

void check_initial_state(double v0, double g0, std::span<const double> w0,
                         std::span<const double> s0) {
    const double implied = payoff_closed_form(v0, w0, s0);
    if (std::abs(implied - g0) > 1e-8 * std::abs(g0)) {
        throw std::invalid_argument(
            "initial state: g0 is not the no-arbitrage payoff of (v0, w(t0), S(t0))");
    }
}

}  // namespace

double discrete_v_update(double v_prev, std::span<const double> reserves,
                         std::span<const double> w_old,
                         std::span<const double> w_new) {
    if (reserves.size() != w_old.size() || reserves.size() != w_new.size()) {
        throw std::invalid_argument("v_update: dimension mismatch");
    }
    if (!(v_prev > 0.0)) throw std::invalid_argument("v_update: v must be positive");
    double delta_sum = 0.0;
    double log_factor = 0.0;
    for (std::size_t i = 0; i < reserves.size(); ++i) {
        if (!(reserves[i] > 0.0)) {
            throw std::invalid_argument("v_update: reserves must be positive");
        }
        const double dw = w_new[i] - w_old[i];
        delta_sum += dw;
        log_factor += dw * std::log(reserves[i]);
    }
    if (std::abs(delta_sum) > 1e-12) {
        throw std::invalid_argument("v_update: weight deltas must sum to zero");
    }
    return v_prev * std::exp(log_factor);
}

double discrete_payoff(double v0, double g0, const WeightSchedule& schedule,
                       const PricePath& path) {
    if (schedule.size() != path.assets()) {
        throw std::invalid_argument("discrete_payoff: schedule and path dimensions differ");
    }
    std::vector<double> w_prev =
        schedule_weights(schedule, path.grid().time(0), path.row(0));
    check_initial_state(v0, g0, w_prev, path.row(0));

    double log_v = std::log(v0);
    for (int k = 1; k < path.rows(); ++k) {
        const auto prices = path.row(k);
        const std::vector<double> w =
            schedule_weights(schedule, path.grid().time(k), prices);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double dw = w[i] - w_prev[i];
            if (dw != 0.0) log_v += dw * std::log(w_prev[i] / prices[i]);
        }
        w_prev = w;
    }
    return payoff_closed_form(std::exp(log_v), w_prev, path.row(path.rows() - 1));
}

ReweightTrajectory simulate_reweighting_pool(const Pool& pool0,
                                             const WeightSchedule& schedule,
                                             const PricePath& path) {
    if (pool0.size() != path.assets() || schedule.size() != path.assets()) {
        throw std::invalid_argument("simulate: pool, schedule and path dimensions differ");
    }

    ReweightTrajectory out;
    Pool pool = pool0;
    for (int k = 0; k < path.rows(); ++k) {
        const auto prices = path.row(k);
        // Arbitrageurs first align the pool with the step's prices, then the
        // weight update opens a fresh opportunity that is taken immediately.
        pool = arbitrage_rebalance(pool, prices).pool;
        const std::vector<double> w =
            schedule_weights(schedule, path.grid().time(k), prices);
        if (w != pool.weights()) {
            pool = Pool(pool.reserves(), w);
            pool = arbitrage_rebalance(pool, prices).pool;
        }
        out.times.push_back(path.grid().time(k));
        out.weights.push_back(pool.weights());
        out.reserves.push_back(pool.reserves());
        out.v_values.push_back(geometric_mean(pool));
        out.g_values.push_back(pool_value(pool, prices));
    }
    return out;
}

double continuous_payoff(double g_t, const WeightSchedule& schedule,
                         const PricePath& path) {
    if (!(g_t > 0.0)) throw std::invalid_argument("payoff: g must be positive");
    if (schedule.size() != path.assets()) {
        throw std::invalid_argument("payoff: schedule and path dimensions differ");
    }
    double ito_sum = 0.0;
    for (int k = 0; k + 1 < path.rows(); ++k) {
        const std::vector<double> w =
            schedule.deterministic() ? schedule.at(path.grid().time(k))
                                     : schedule.at(path.grid().time(k), path.row(k));
        for (std::size_t i = 0; i < w.size(); ++i) {
            ito_sum += w[i] * std::log(path.at(k + 1, i) / path.at(k, i));
        }
    }
    return g_t * std::exp(ito_sum);
}

double wgm_continuous(double v_t, const WeightSchedule& schedule,
                      const PricePath& path) {
    if (!(v_t > 0.0)) throw std::invalid_argument("wgm: v must be positive");
    const int last = path.rows() - 1;
    const std::vector<double> w_start =
        schedule_weights(schedule, path.grid().time(0), path.row(0));
    const std::vector<double> w_end =
        schedule_weights(schedule, path.grid().time(last), path.row(last));

    double log_v = std::log(v_t);
    for (std::size_t i = 0; i < w_start.size(); ++i) {
        log_v += w_end[i] * std::log(w_end[i] / path.at(last, i));
        log_v += w_start[i] * std::log(path.at(0, i) / w_start[i]);
    }
    for (int k = 0; k + 1 < path.rows(); ++k) {
        const std::vector<double> w =
            schedule.deterministic() ? schedule.at(path.grid().time(k))
                                     : schedule.at(path.grid().time(k), path.row(k));
        for (std::size_t i = 0; i < w.size(); ++i) {
            log_v += w[i] * std::log(path.at(k + 1, i) / path.at(k, i));
        }
    }
    return std::exp(log_v);
}

void write_csv(const ReweightTrajectory& trajectory, std::ostream& out) {
    const std::size_t n = trajectory.weights.empty() ? 0 : trajectory.weights[0].size();
    out << "time";
    for (std::size_t i = 0; i < n; ++i) out << ",w_" << i;
    for (std::size_t i = 0; i < n; ++i) out << ",r_" << i;
    out << ",V,G\n";
    for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
        out << format_double(trajectory.times[k]);
        for (double w : trajectory.weights[k]) out << ',' << format_double(w);
        for (double r : trajectory.reserves[k]) out << ',' << format_double(r);
        out << ',' << format_double(trajectory.v_values[k]) << ','
            << format_double(trajectory.g_values[k]) << '\n';
    }
}

}  // namespace g3m
