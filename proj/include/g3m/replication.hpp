#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g3m/market.hpp"

namespace g3m {

/// Black–Scholes inputs for the option legs used by the replication
/// weights: risk-free rate, volatility of the risky asset, strike and
/// expiry of the option.
struct BsParams {
    double r = 0.0;
    double sigma = 0.2;
    double strike = 100.0;
    double expiry = 1.0;
};

void validate(const BsParams& p);

// European put value K e^{-r(T-t)} Phi(-d2) - x Phi(-d1).
// Throws std::domain_error for t >= T; use the intrinsic value there.
double bs_put_price(double x, double t, const BsParams& p);

// European call value x Phi(d1) - K e^{-r(T-t)} Phi(d2).
double bs_call_price(double x, double t, const BsParams& p);

/// Target payoff g(x,t) with its derivative in x. Analytic derivatives are
/// used where the kind provides one; custom specs fall back to a centered
/// difference with relative step 1e-6 that refuses kinks.
class PayoffSpec {
public:
    enum class Kind { forward, call, put, protective_put, covered_call, power, custom };

    static PayoffSpec forward();               // g(x) = x
    static PayoffSpec bs_call(BsParams p);     // g = C(x,t), intrinsic at expiry
    static PayoffSpec bs_put(BsParams p);      // g = P(x,t), intrinsic at expiry
    static PayoffSpec protective_put(BsParams p);  // g = x + P(x,t)
    static PayoffSpec covered_call(BsParams p);    // g = x - C(x,t)
    static PayoffSpec power(double exponent);      // g(x) = x^exponent
    static PayoffSpec custom(std::function<double(double, double)> value,
                             std::function<double(double, double)> dvalue = {});

    Kind kind() const { return kind_; }
    const std::optional<BsParams>& bs_params() const { return bs_; }

    double value(double x, double t) const;
    // dg/dx. Numerical for custom specs without an analytic derivative;
    // throws std::domain_error when the one-sided differences disagree
    // (payoff not differentiable at x).
    double slope(double x, double t) const;

private:
    PayoffSpec(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::optional<BsParams> bs_;
    double exponent_ = 1.0;
    std::function<double(double, double)> value_;
    std::function<double(double, double)> dvalue_;
};

// Replicating weight w*(x,t) = x g_x / g, the elasticity of the payoff.
// Throws std::domain_error when g(x,t) <= 0.
double elasticity_weight(const PayoffSpec& spec, double x, double t);

struct WeightViolation {
    double x;
    double t;
    double w;
};

// Scans the grid for elasticities outside [0,1] (tolerance 1e-12).
// An empty result means the payoff is G3M-replicable on the grid.
std::vector<WeightViolation> check_replicable(const PayoffSpec& spec,
                                              std::span<const double> x_grid,
                                              std::span<const double> t_grid);

// Closed-form protective-put weight x Phi(d1) / (P(x,t) + x).
double protective_put_weight(double x, double t, const BsParams& p);

// Elasticity of the covered call x - C(x,t); always lies in [0,1].
double covered_call_weight(double x, double t, const BsParams& p);

/// A position held alongside the replicating LP so that LP minus offset
/// reproduces a naked option.
struct OffsetPosition {
    enum class Leg { money_market, risky_asset };
    Leg leg;
    std::string description;
    std::function<double(double x, double t)> value;
};

struct OffsetDecomposition {
    PayoffSpec lp_spec;
    OffsetPosition offset;
};

enum class OptionKind { call, put };

// Replicable LP payoff plus offsetting short position for a naked option:
// call -> LP holds C + K e^{-r(T-t)} in cash terms, short the cash leg;
// put  -> LP holds the protective put, short one unit of the risky asset.
OffsetDecomposition naked_option_offsets(OptionKind kind, const BsParams& p);

// Weight for a pool whose reserve asset is itself a derivative with price
// z(x): dlog g / dlog z. Throws std::domain_error when z has zero slope.
double derivative_reserve_weight(const PayoffSpec& g_spec, const PayoffSpec& z_spec,
                                 double x, double t = 0.0);

struct ReplicationReport {
    std::vector<double> times;
    std::vector<double> weight_path;
    std::vector<double> lp_values;
    std::vector<double> target_values;
    double max_abs_tracking_error = 0.0;
    double max_rel_tracking_error = 0.0;
    double signed_terminal_gap = 0.0;
};

// Tracks g(S(t),t) with a two-asset pool (risky asset + money market
// growing at e^{rt}), re-weighting to the payoff's elasticity every
// `reweight_every` path steps. Weights are never evaluated at the final
// grid time (option payoffs lose differentiability at expiry). Weight
// values outside [0,1] throw std::domain_error unless clamp_weights is
// set. `risky_path` must be a single-asset path.
ReplicationReport replicate_along_path(const PayoffSpec& spec, double rate,
                                       const PricePath& risky_path,
                                       int reweight_every,
                                       bool clamp_weights = false);

}  // namespace g3m
