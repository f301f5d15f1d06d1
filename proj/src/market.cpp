#include "g3m/market.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "g3m/rng.hpp"

namespace g3m {

namespace {

double corr_entry(const MarketParams& p, std::size_t i, std::size_t j) {
    if (p.corr.empty()) return i == j ? 1.0 : 0.0;
    return p.corr[i][j];
}

}  // namespace

MarketParams MarketParams::uncorrelated(double r, std::vector<double> sigma) {
    MarketParams p;
    p.r = r;
    p.sigma = std::move(sigma);
    return p;
}

void validate(const MarketParams& params) {
    if (params.sigma.empty()) {
        throw std::invalid_argument("market: needs at least one asset");
    }
    for (double s : params.sigma) {
        if (!(s > 0.0)) throw std::invalid_argument("market: volatility must be positive");
    }
    if (params.corr.empty()) return;

    const std::size_t n = params.sigma.size();
    if (params.corr.size() != n) {
        throw std::invalid_argument("market: correlation matrix size mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (params.corr[i].size() != n) {
            throw std::invalid_argument("market: correlation matrix is not square");
        }
        if (params.corr[i][i] != 1.0) {
            throw std::invalid_argument("market: correlation diagonal must be exactly 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (params.corr[i][j] != params.corr[j][i]) {
                throw std::invalid_argument("market: correlation matrix is not symmetric");
            }
        }
    }
    correlation_factor(params.corr);  // PSD check
}

std::vector<std::vector<double>> correlation_factor(
    const std::vector<std::vector<double>>& corr) {
    const std::size_t n = corr.size();
    constexpr double kPivotTol = 1e-10;
    std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        double d = corr[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= L[j][k] * L[j][k];
        if (d < -kPivotTol) {
            throw std::domain_error("correlation matrix is not positive semidefinite");
        }
        L[j][j] = d > 0.0 ? std::sqrt(d) : 0.0;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = corr[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
            L[i][j] = L[j][j] > 0.0 ? s / L[j][j] : 0.0;
        }
    }
    // A zeroed pivot silently drops whatever the column still carried, so
    // confirm the factor actually reproduces the matrix.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k <= j; ++k) s += L[i][k] * L[j][k];
            if (std::abs(s - corr[i][j]) > 1e-8) {
                throw std::domain_error("correlation matrix is not positive semidefinite");
            }
        }
    }
    return L;
}

void validate(const PathGrid& grid) {
    if (!(grid.t0 >= 0.0) || !(grid.T > grid.t0)) {
        throw std::invalid_argument("grid: requires T > t0 >= 0");
    }
    if (grid.steps < 1) throw std::invalid_argument("grid: needs at least one step");
}

PricePath simulate_path(const MarketParams& params, std::span<const double> s0,
                        const PathGrid& grid, std::uint64_t seed,
                        std::uint64_t path_index, bool negate) {
    validate(params);
    validate(grid);
    const std::size_t n = params.size();
    if (s0.size() != n) throw std::invalid_argument("simulate: s0 size mismatch");
    validate_prices(s0);

    const auto L = params.corr.empty() ? std::vector<std::vector<double>>{}
                                       : correlation_factor(params.corr);
    const double h = grid.dt();
    const double sqrt_h = std::sqrt(h);
    const double sign = negate ? -1.0 : 1.0;

    PricePath path(grid, n);
    std::vector<double> log_s(n), drift(n), z(n), eps(n);
    for (std::size_t i = 0; i < n; ++i) {
        log_s[i] = std::log(s0[i]);
        drift[i] = (params.r - 0.5 * params.sigma[i] * params.sigma[i]) * h;
        path.at(0, i) = s0[i];
    }

    PathRng rng(seed, path_index);
    for (int k = 1; k <= grid.steps; ++k) {
        for (std::size_t i = 0; i < n; ++i) z[i] = sign * rng.gaussian();
        if (L.empty()) {
            eps = z;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j <= i; ++j) acc += L[i][j] * z[j];
                eps[i] = acc;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            log_s[i] += drift[i] + params.sigma[i] * sqrt_h * eps[i];
            path.at(k, i) = std::exp(log_s[i]);
        }
    }
    return path;
}

std::vector<PricePath> simulate_paths(const MarketParams& params,
                                      std::span<const double> s0,
                                      const PathGrid& grid, std::uint64_t seed,
                                      int n_paths) {
    if (n_paths < 1) throw std::invalid_argument("simulate: n_paths must be positive");
    std::vector<PricePath> paths;
    paths.reserve(n_paths);
    for (int p = 0; p < n_paths; ++p) {
        paths.push_back(simulate_path(params, s0, grid, seed, p));
    }
    return paths;
}

double portfolio_volatility(std::span<const double> weights,
                            const MarketParams& params) {
    validate_weights(weights);
    validate(params);
    if (weights.size() != params.size()) {
        throw std::invalid_argument("portfolio_volatility: dimension mismatch");
    }
    double var = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (std::size_t j = 0; j < weights.size(); ++j) {
            var += weights[i] * weights[j] * params.sigma[i] * params.sigma[j] *
                   corr_entry(params, i, j);
        }
    }
    return std::sqrt(var > 0.0 ? var : 0.0);
}

double ratio_volatility(const MarketParams& params, std::size_t a, std::size_t b) {
    validate(params);
    if (a == b || a >= params.size() || b >= params.size()) {
        throw std::invalid_argument("ratio_volatility: invalid asset pair");
    }
    const double sa = params.sigma[a];
    const double sb = params.sigma[b];
    const double var = sa * sa + sb * sb - 2.0 * sa * sb * corr_entry(params, a, b);
    return std::sqrt(var > 0.0 ? var : 0.0);
}

}  // namespace g3m
