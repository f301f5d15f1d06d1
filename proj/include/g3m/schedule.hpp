#pragma once

#include <functional>
#include <span>
#include <vector>

namespace g3m {

/// Weight trajectory for a re-weighting pool. Deterministic kinds are pure
/// functions of time; state-dependent rules also see the current price
/// vector. Every emitted weight vector is validated (nonnegative, summing
/// to one).
class WeightSchedule {
public:
    enum class Kind { deterministic, piecewise, state_dependent };

    static WeightSchedule constant(std::vector<double> weights);
    // Componentwise linear interpolation from w0 at t0 to w1 at t1,
    // clamped outside [t0, t1].
    static WeightSchedule linear(std::vector<double> w0, std::vector<double> w1,
                                 double t0, double t1);
    static WeightSchedule from_function(
        std::size_t n_assets, std::function<std::vector<double>(double)> fn);
    // Right-continuous step function: weights[k] applies on [times[k], times[k+1]).
    static WeightSchedule piecewise(std::vector<double> times,
                                    std::vector<std::vector<double>> weights);
    static WeightSchedule state_dependent(
        std::size_t n_assets,
        std::function<std::vector<double>(double, std::span<const double>)> fn);

    Kind kind() const { return kind_; }
    bool deterministic() const { return kind_ != Kind::state_dependent; }
    std::size_t size() const { return n_; }

    // Throws std::invalid_argument for state-dependent schedules.
    std::vector<double> at(double t) const;
    std::vector<double> at(double t, std::span<const double> prices) const;

private:
    WeightSchedule(Kind kind, std::size_t n) : kind_(kind), n_(n) {}

    Kind kind_;
    std::size_t n_;
    std::function<std::vector<double>(double, std::span<const double>)> eval_;
};

}  // namespace g3m
