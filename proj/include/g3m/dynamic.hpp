#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "g3m/market.hpp"
#include "g3m/pool.hpp"
#include "g3m/schedule.hpp"

namespace g3m {

// Invariant after a weight update with reserves held fixed:
// v_new = v_prev * prod_i R_i^{w_new_i - w_old_i}. The weight deltas must
// sum to zero (within 1e-12).
double discrete_v_update(double v_prev, std::span<const double> reserves,
                         std::span<const double> w_old,
                         std::span<const double> w_new);

// Terminal LP payoff of a re-weighting pool, with reserves eliminated
// through the no-arbitrage allocation. Each re-weight at grid time t_k
// multiplies the invariant by prod_i (w_i(t_{k-1})/S_i(t_k))^{dw_i}, i.e.
// pre-update weights at post-move prices; the mechanical pool simulation
// below reproduces this step for step. Requires strictly positive weights
// along the schedule and an initial state with
// payoff_closed_form(v0, w(t0), S(t0)) = g0.
double discrete_payoff(double v0, double g0, const WeightSchedule& schedule,
                       const PricePath& path);

/// Step-by-step record of a re-weighting pool driven by one price path.
struct ReweightTrajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> reserves;
    std::vector<double> v_values;
    std::vector<double> g_values;

    double terminal_value() const { return g_values.back(); }
};

// Mechanical oracle: at every grid time the pool is arbitrage-rebalanced
// to the step's prices, re-weighted to the schedule, and rebalanced again
// (each weight jump opens an arbitrage that is taken immediately).
ReweightTrajectory simulate_reweighting_pool(const Pool& pool0,
                                             const WeightSchedule& schedule,
                                             const PricePath& path);

// Continuous-limit payoff via the left-endpoint Ito sum
//   G(T) = g_t * exp( sum_i sum_k w_i(t_k) [log S_i(t_{k+1}) - log S_i(t_k)] ).
double continuous_payoff(double g_t, const WeightSchedule& schedule,
                         const PricePath& path);

// Continuous-limit weighted geometric mean,
//   V(T) = v_t * prod_i (w_i(T)/S_i(T))^{w_i(T)} (S_i(t)/w_i(t))^{w_i(t)}
//          * exp(int w_i dlog S_i),
// consistent with continuous_payoff through the closed-form payoff map.
double wgm_continuous(double v_t, const WeightSchedule& schedule,
                      const PricePath& path);

// CSV rows (time, w_0.., r_0.., V, G) with a header line.
void write_csv(const ReweightTrajectory& trajectory, std::ostream& out);

}  // namespace g3m
