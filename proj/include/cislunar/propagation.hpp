#pragma once

#include <array>
#include <functional>

#include "cislunar/system.hpp"

namespace cislunar {

struct IntegratorOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double initial_step = 0.0;  // 0 = choose automatically
    double max_step = 0.0;      // 0 = unlimited
    long max_steps = 50'000'000;
};

/// Dense-output interpolant over one accepted step [t_left, t_right].
/// Polynomial of degree 7 in the normalized step coordinate.
struct DenseSpan {
    double t_left = 0.0;
    double t_right = 0.0;
    std::array<Vec6<double>, 8> coeff{};

    Vec6<double> eval(double t) const;
};

/// Adaptive Dormand-Prince 8(5,3) integrator with 7th-order dense output
/// (the dop853 scheme of Hairer, Norsett and Wanner). The right-hand side
/// is an arbitrary callable f(t, y) -> dy/dt on 6-vectors. Step counters
/// live on the instance, so use one instance per thread.
class Dop853 {
public:
    using Rhs = std::function<Vec6<double>(double, const Vec6<double>&)>;

    Dop853(Rhs rhs, IntegratorOptions opts = {});

    /// Integrate from (t0, y0) to t1. After every accepted step the sink is
    /// called with the dense interpolant covering that step; return false
    /// from the sink to stop early. Returns the state at the final time
    /// reached.
    Vec6<double> integrate(double t0, const Vec6<double>& y0, double t1,
                           const std::function<bool(const DenseSpan&)>& sink = {}) const;

    long last_step_count() const { return steps_taken_; }
    long last_rejected_count() const { return steps_rejected_; }

private:
    Rhs rhs_;
    IntegratorOptions opts_;
    mutable long steps_taken_ = 0;
    mutable long steps_rejected_ = 0;
};

/// Propagate a CR3BP state for t_final time units, returning samples on the
/// exact grid t0 + i*dt (internally the integrator steps adaptively and the
/// grid values come from dense output). t_final = 0 yields the single
/// initial sample.
Trajectory propagate(const StateVector& state0, const SystemConstants& constants,
                     double t_final, double dt, double tol = 1e-12, double t0 = 0.0);

}  // namespace cislunar
