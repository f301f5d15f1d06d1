#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace g3m {

// Default relative tolerance on the pool invariant for trade feasibility.
inline constexpr double kFeasibilityTol = 1e-9;

// Throws std::invalid_argument unless the weights are nonnegative and sum
// to one within 1e-12.
void validate_weights(std::span<const double> weights);

// Throws std::invalid_argument unless every price is strictly positive.
void validate_prices(std::span<const double> prices);

/// A trade against the pool. Positive deltas are amounts the trader
/// deposits, negative deltas are amounts the trader withdraws.
struct Trade {
    std::vector<double> deltas;
};

/// Reserves and target weights of a geometric mean market maker.
///
/// Reserves must be strictly positive wherever the weight is positive.
/// A zero weight is accepted only together with a zero reserve (the pool
/// has no exposure to that asset); such assets are skipped by the value
/// formulas and cannot be traded.
class Pool {
public:
    Pool(std::vector<double> reserves, std::vector<double> weights);

    std::size_t size() const { return reserves_.size(); }
    const std::vector<double>& reserves() const { return reserves_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> reserves_;
    std::vector<double> weights_;
};

// Pool invariant V = prod_i R_i^{w_i}.
double geometric_mean(const Pool& pool);

// True iff the post-trade weighted geometric mean matches V within tol*V
// and the trade leaves every traded reserve strictly positive.
bool is_feasible(const Pool& pool, const Trade& trade,
                 double tol = kFeasibilityTol);

// Applies a feasible trade, leaving weights (and hence V) unchanged.
// Throws std::domain_error if the trade is infeasible or drives a reserve
// to zero or below.
Pool apply_trade(const Pool& pool, const Trade& trade,
                 double tol = kFeasibilityTol);

// Marginal price of asset i quoted in units of asset j:
// (R_j/w_j) / (R_i/w_i). Both weights must be positive.
double spot_price(const Pool& pool, std::size_t i, std::size_t j);

// Redemption value of the reserves, G = sum_i R_i S_i.
double pool_value(const Pool& pool, std::span<const double> prices);

// LP payoff as a function of the invariant alone:
// G = V * prod_i (S_i/w_i)^{w_i}, zero-weight factors taken as 1.
double payoff_closed_form(double v, std::span<const double> weights,
                          std::span<const double> prices);

struct RebalanceResult {
    Pool pool;       // reserves moved to R_i' = w_i G' / S_i
    Trade trade;     // R' - R, the arbitrageur's deposit vector
    double profit;   // -sum_i S_i Delta_i, nonnegative
};

// The profit-maximizing arbitrage trade against external prices. The
// resulting pool allocates value in proportion to the weights, so it
// quotes exactly the external price ratios.
RebalanceResult arbitrage_rebalance(const Pool& pool,
                                    std::span<const double> prices);

// Trader profit -sum_i S_i Delta_i of a feasible trade.
// Throws std::domain_error if the trade is infeasible.
double arbitrage_profit_of_trade(const Pool& pool,
                                 std::span<const double> prices,
                                 const Trade& trade,
                                 double tol = kFeasibilityTol);

// Completes a partially specified trade: deltas[solve_index] is recomputed
// so the trade preserves the invariant exactly.
Trade complete_trade(const Pool& pool, std::vector<double> deltas,
                     std::size_t solve_index);

}  // namespace g3m
