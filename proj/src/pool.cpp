#include "g3m/pool.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace g3m {

namespace {

constexpr double kWeightSumTol = 1e-12;

void check_dimension(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw std::invalid_argument(std::string(what) + ": dimension " +
                                    std::to_string(got) + " does not match pool size " +
                                    std::to_string(want));
    }
}

// log of prod_i R_i^{w_i}; zero-weight entries contribute nothing.
double log_weighted_mean(std::span<const double> reserves,
                         std::span<const double> weights) {
    double acc = 0.0;
    for (std::size_t i = 0; i < reserves.size(); ++i) {
        if (weights[i] > 0.0) acc += weights[i] * std::log(reserves[i]);
    }
    return acc;
}

}  // namespace

void validate_weights(std::span<const double> weights) {
    if (weights.empty()) throw std::invalid_argument("weights: empty vector");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("weights: negative or NaN entry");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        throw std::invalid_argument("weights: sum " + std::to_string(sum) +
                                    " is not 1 within 1e-12");
    }
}

void validate_prices(std::span<const double> prices) {
    for (double s : prices) {
        if (!(s > 0.0)) throw std::invalid_argument("prices: nonpositive or NaN entry");
    }
}

Pool::Pool(std::vector<double> reserves, std::vector<double> weights)
    : reserves_(std::move(reserves)), weights_(std::move(weights)) {
    if (reserves_.size() != weights_.size()) {
        throw std::invalid_argument("pool: reserves and weights differ in length");
    }
    if (reserves_.size() < 2) throw std::invalid_argument("pool: needs at least 2 assets");
    validate_weights(weights_);
    for (std::size_t i = 0; i < reserves_.size(); ++i) {
        if (weights_[i] > 0.0) {
            if (!(reserves_[i] > 0.0)) {
                throw std::invalid_argument("pool: reserve " + std::to_string(i) +
                                            " must be strictly positive");
            }
        } else if (reserves_[i] != 0.0) {
            throw std::invalid_argument("pool: asset " + std::to_string(i) +
                                        " has zero weight but nonzero reserve");
        }
    }
}

double geometric_mean(const Pool& pool) {
    return std::exp(log_weighted_mean(pool.reserves(), pool.weights()));
}

bool is_feasible(const Pool& pool, const Trade& trade, double tol) {
    check_dimension(trade.deltas.size(), pool.size(), "trade");
    const auto& r = pool.reserves();
    const auto& w = pool.weights();
    double log_after = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const double post = r[i] + trade.deltas[i];
        if (w[i] > 0.0) {
            if (!(post > 0.0)) return false;
            log_after += w[i] * std::log(post);
        } else if (trade.deltas[i] != 0.0) {
            return false;  // zero-weight assets are not tradable
        }
    }
    const double v = geometric_mean(pool);
    return std::abs(std::exp(log_after) - v) <= tol * v;
}

Pool apply_trade(const Pool& pool, const Trade& trade, double tol) {
    check_dimension(trade.deltas.size(), pool.size(), "trade");
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool.weights()[i] > 0.0 && !(pool.reserves()[i] + trade.deltas[i] > 0.0)) {
            throw std::domain_error("trade: post-trade reserve " + std::to_string(i) +
                                    " is not strictly positive");
        }
    }
    if (!is_feasible(pool, trade, tol)) {
        throw std::domain_error("trade: does not preserve the weighted geometric mean");
    }
    std::vector<double> post(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        post[i] = pool.reserves()[i] + trade.deltas[i];
    }
    return Pool(std::move(post), pool.weights());
}

double spot_price(const Pool& pool, std::size_t i, std::size_t j) {
    if (i >= pool.size() || j >= pool.size() || i == j) {
        throw std::invalid_argument("spot_price: invalid asset pair");
    }
    const auto& w = pool.weights();
    if (!(w[i] > 0.0) || !(w[j] > 0.0)) {
        throw std::invalid_argument("spot_price: zero-weight asset has no quoted price");
    }
    const auto& r = pool.reserves();
    return (r[j] / w[j]) / (r[i] / w[i]);
}

double pool_value(const Pool& pool, std::span<const double> prices) {
    check_dimension(prices.size(), pool.size(), "prices");
    validate_prices(prices);
    double value = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        value += pool.reserves()[i] * prices[i];
    }
    return value;
}

double payoff_closed_form(double v, std::span<const double> weights,
                          std::span<const double> prices) {
    validate_weights(weights);
    check_dimension(prices.size(), weights.size(), "prices");
    validate_prices(prices);
    if (!(v > 0.0)) throw std::invalid_argument("payoff_closed_form: v must be positive");
    double log_factor = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0.0) log_factor += weights[i] * std::log(prices[i] / weights[i]);
    }
    return v * std::exp(log_factor);
}

RebalanceResult arbitrage_rebalance(const Pool& pool,
                                    std::span<const double> prices) {
    check_dimension(prices.size(), pool.size(), "prices");
    validate_prices(prices);
    const double v = geometric_mean(pool);
    const double g = payoff_closed_form(v, pool.weights(), prices);
    std::vector<double> target(pool.size());
    Trade trade{std::vector<double>(pool.size())};
    double profit = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        target[i] = pool.weights()[i] > 0.0 ? pool.weights()[i] * g / prices[i] : 0.0;
        trade.deltas[i] = target[i] - pool.reserves()[i];
        profit -= prices[i] * trade.deltas[i];
    }
    return RebalanceResult{Pool(std::move(target), pool.weights()),
                           std::move(trade), profit};
}

double arbitrage_profit_of_trade(const Pool& pool,
                                 std::span<const double> prices,
                                 const Trade& trade, double tol) {
    check_dimension(prices.size(), pool.size(), "prices");
    validate_prices(prices);
    if (!is_feasible(pool, trade, tol)) {
        throw std::domain_error("trade: infeasible, no profit defined");
    }
    double profit = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        profit -= prices[i] * trade.deltas[i];
    }
    return profit;
}

Trade complete_trade(const Pool& pool, std::vector<double> deltas,
                     std::size_t solve_index) {
    check_dimension(deltas.size(), pool.size(), "trade");
    if (solve_index >= pool.size()) {
        throw std::invalid_argument("complete_trade: solve_index out of range");
    }
    const auto& r = pool.reserves();
    const auto& w = pool.weights();
    if (!(w[solve_index] > 0.0)) {
        throw std::invalid_argument("complete_trade: cannot solve for a zero-weight asset");
    }
    double log_rest = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i == solve_index) continue;
        const double post = r[i] + deltas[i];
        if (w[i] > 0.0) {
            if (!(post > 0.0)) {
                throw std::domain_error("complete_trade: post-trade reserve " +
                                        std::to_string(i) + " is not strictly positive");
            }
            log_rest += w[i] * std::log(post);
        } else if (deltas[i] != 0.0) {
            throw std::domain_error("complete_trade: zero-weight asset is not tradable");
        }
    }
    const double log_v = log_weighted_mean(r, w);
    const double solved = std::exp((log_v - log_rest) / w[solve_index]);
    deltas[solve_index] = solved - r[solve_index];
    return Trade{std::move(deltas)};
}

}  // namespace g3m
