#pragma once

#include "cislunar/propagation.hpp"
#include "cislunar/system.hpp"

namespace cislunar {

/// A converged periodic initial condition with its period.
struct PeriodicOrbit {
    StateVector initial_state = StateVector::Zero();
    double period = 0.0;
    double residual = 0.0;  // |(vx, vz)| at the half-period crossing
    bool planar = false;
};

/// Differential correction of a symmetric periodic-orbit seed. The seed is
/// snapped onto the y = 0 plane with perpendicular velocity; Newton steps
/// on (x0, vy0) drive the half-period crossing velocity components (vx, vz)
/// to zero. Planar seeds (z and vz negligible) adjust vy0 alone. Published
/// initial conditions quoted to a few digits land ~1e-5 off the orbit;
/// this removes that truncation error.
PeriodicOrbit refine_periodic_orbit(const StateVector& seed, const SystemConstants& constants,
                                    double max_half_period = 10.0, double tol = 1e-12,
                                    int max_iterations = 30);

/// Time and state of the first y = 0 crossing after t = 0 (used by the
/// corrector; exposed for tests).
std::pair<double, StateVector> first_plane_crossing(const StateVector& state0,
                                                    const SystemConstants& constants,
                                                    double t_max, double integ_tol = 1e-13);

}  // namespace cislunar
