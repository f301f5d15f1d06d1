#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace g3m {

/// Constant-coefficient risk-neutral market: money market rate r, per-asset
/// volatilities and the instantaneous correlation matrix of the driving
/// Brownian motions.
struct MarketParams {
    double r = 0.0;
    std::vector<double> sigma;
    std::vector<std::vector<double>> corr;  // empty means identity

    std::size_t size() const { return sigma.size(); }

    static MarketParams uncorrelated(double r, std::vector<double> sigma);
};

// Throws unless sigma is strictly positive and corr is symmetric with unit
// diagonal and positive semidefinite (std::domain_error for the PSD check,
// std::invalid_argument otherwise).
void validate(const MarketParams& params);

// Lower-triangular L with L L^T = corr. Handles semidefinite matrices
// (zero pivots give zero columns); throws std::domain_error when corr is
// not PSD, detected by a negative pivot or a reconstruction residual.
std::vector<std::vector<double>> correlation_factor(
    const std::vector<std::vector<double>>& corr);

/// Uniform time grid on [t0, T] with `steps` intervals.
struct PathGrid {
    double t0 = 0.0;
    double T = 1.0;
    int steps = 1;

    double dt() const { return (T - t0) / steps; }
    double time(int k) const { return t0 + (T - t0) * k / steps; }
    double horizon() const { return T - t0; }
};

void validate(const PathGrid& grid);

/// One simulated price trajectory: (steps+1) rows of n asset prices.
class PricePath {
public:
    PricePath(PathGrid grid, std::size_t n_assets)
        : grid_(grid), n_(n_assets),
          data_(static_cast<std::size_t>(grid.steps + 1) * n_assets) {}

    const PathGrid& grid() const { return grid_; }
    std::size_t assets() const { return n_; }
    int rows() const { return grid_.steps + 1; }

    double at(int row, std::size_t asset) const { return data_[row * n_ + asset]; }
    double& at(int row, std::size_t asset) { return data_[row * n_ + asset]; }
    std::span<const double> row(int k) const { return {data_.data() + k * n_, n_}; }

private:
    PathGrid grid_;
    std::size_t n_;
    std::vector<double> data_;
};

// Exact-in-distribution GBM sampling of one path:
//   log S_i(t+h) = log S_i(t) + (r - sigma_i^2/2) h + sigma_i sqrt(h) eps_i
// with eps = L z correlated through the factorization of corr. The path is
// a pure function of (seed, path_index); `negate` flips every shock for
// antithetic sampling.
PricePath simulate_path(const MarketParams& params, std::span<const double> s0,
                        const PathGrid& grid, std::uint64_t seed,
                        std::uint64_t path_index, bool negate = false);

std::vector<PricePath> simulate_paths(const MarketParams& params,
                                      std::span<const double> s0,
                                      const PathGrid& grid, std::uint64_t seed,
                                      int n_paths);

// Volatility of the weighted geometric mean of the asset prices:
// sigma_P = sqrt(sum_i w_i^2 s_i^2 + sum_{i!=j} w_i w_j s_i s_j rho_ij).
double portfolio_volatility(std::span<const double> weights,
                            const MarketParams& params);

// Volatility of the price ratio S_a/S_b:
// sigma_r = sqrt(s_a^2 + s_b^2 - 2 s_a s_b rho_ab).
double ratio_volatility(const MarketParams& params, std::size_t a, std::size_t b);

}  // namespace g3m
