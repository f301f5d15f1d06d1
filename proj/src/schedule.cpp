#include "g3m/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "g3m/pool.hpp"

namespace g3m {

WeightSchedule WeightSchedule::constant(std::vector<double> weights) {
    validate_weights(weights);
    WeightSchedule s(Kind::deterministic, weights.size());
    s.eval_ = [w = std::move(weights)](double, std::span<const double>) { return w; };
    return s;
}

WeightSchedule WeightSchedule::linear(std::vector<double> w0, std::vector<double> w1,
                                      double t0, double t1) {
    validate_weights(w0);
    validate_weights(w1);
    if (w0.size() != w1.size()) {
        throw std::invalid_argument("schedule: endpoint weight vectors differ in length");
    }
    if (!(t1 > t0)) throw std::invalid_argument("schedule: requires t1 > t0");
    WeightSchedule s(Kind::deterministic, w0.size());
    s.eval_ = [w0 = std::move(w0), w1 = std::move(w1), t0, t1](
                  double t, std::span<const double>) {
        const double u = std::clamp((t - t0) / (t1 - t0), 0.0, 1.0);
        std::vector<double> w(w0.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = (1.0 - u) * w0[i] + u * w1[i];
        }
        return w;
    };
    return s;
}

WeightSchedule WeightSchedule::from_function(
    std::size_t n_assets, std::function<std::vector<double>(double)> fn) {
    WeightSchedule s(Kind::deterministic, n_assets);
    s.eval_ = [fn = std::move(fn)](double t, std::span<const double>) { return fn(t); };
    return s;
}

WeightSchedule WeightSchedule::piecewise(std::vector<double> times,
                                         std::vector<std::vector<double>> weights) {
    if (times.empty() || times.size() != weights.size()) {
        throw std::invalid_argument("schedule: times and weight rows must match and be nonempty");
    }
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        if (!(times[k] < times[k + 1])) {
            throw std::invalid_argument("schedule: times must be strictly increasing");
        }
    }
    for (const auto& w : weights) {
        validate_weights(w);
        if (w.size() != weights.front().size()) {
            throw std::invalid_argument("schedule: weight rows differ in length");
        }
    }
    WeightSchedule s(Kind::piecewise, weights.front().size());
    s.eval_ = [times = std::move(times), weights = std::move(weights)](
                  double t, std::span<const double>) {
        // Nudge absorbs grid round-off when table times coincide with path times.
        const double nudged = t + 1e-12 * std::max(1.0, std::abs(t));
        auto it = std::upper_bound(times.begin(), times.end(), nudged);
        const std::size_t idx = it == times.begin() ? 0 : (it - times.begin()) - 1;
        return weights[idx];
    };
    return s;
}

WeightSchedule WeightSchedule::state_dependent(
    std::size_t n_assets,
    std::function<std::vector<double>(double, std::span<const double>)> fn) {
    WeightSchedule s(Kind::state_dependent, n_assets);
    s.eval_ = std::move(fn);
    return s;
}

std::vector<double> WeightSchedule::at(double t) const {
    if (!deterministic()) {
        throw std::invalid_argument("schedule: state-dependent rule needs prices");
    }
    return at(t, {});
}

std::vector<double> WeightSchedule::at(double t, std::span<const double> prices) const {
    std::vector<double> w = eval_(t, prices);
    validate_weights(w);
    if (w.size() != n_) {
        throw std::invalid_argument("schedule: emitted weight vector has wrong length");
    }
    return w;
}

}  // namespace g3m
