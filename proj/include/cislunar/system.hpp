#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "cislunar/errors.hpp"

namespace cislunar {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vec6 = Eigen::Matrix<Scalar, 6, 1>;

/// Spacecraft state in the rotating frame: (x, y, z, vx, vy, vz),
/// positions in LU, velocities in LU/TU.
using StateVector = Vec6<double>;

/// Nondimensionalization constants of the Earth-Moon system.
/// mu is the smaller primary's mass over the total mass; length_unit_km
/// is the primary separation per LU; time_unit_s is the inverse relative
/// angular rate per TU.
struct SystemConstants {
    double mu = 1.2150e-2;
    double length_unit_km = 389703.0;
    double time_unit_s = 382981.0;
    double moon_radius_km = 1737.1;
    /// States closer than this (LU) to either primary are rejected.
    double singularity_radius = 1e-6;

    void validate() const {
        // mu == 0 is the documented two-body limit, so the lower bound is
        // inclusive here.
        if (!(mu >= 0.0 && mu < 0.5))
            throw ConfigError("SystemConstants: mu must satisfy 0 <= mu < 1/2");
        if (!(length_unit_km > 0.0 && time_unit_s > 0.0 && moon_radius_km > 0.0))
            throw ConfigError("SystemConstants: units must be positive");
        if (!(singularity_radius > 0.0))
            throw ConfigError("SystemConstants: singularity_radius must be positive");
    }

    static SystemConstants earth_moon() { return SystemConstants{}; }
};

/// Uniformly sampled state history. Column i of `states` is the sample at
/// t0 + i*dt; timestamps are always reconstructed as multiples of dt so a
/// long trajectory accumulates no grid drift.
struct Trajectory {
    double t0 = 0.0;
    double dt = 0.0;
    Eigen::Matrix<double, 6, Eigen::Dynamic> states;

    Eigen::Index size() const { return states.cols(); }
    double time(Eigen::Index i) const { return t0 + static_cast<double>(i) * dt; }
    double duration() const { return size() > 0 ? time(size() - 1) - t0 : 0.0; }
    StateVector sample(Eigen::Index i) const { return states.col(i); }

    void validate() const {
        if (states.cols() == 0) throw DimensionError("Trajectory: no samples");
        if (!(dt > 0.0) && states.cols() > 1)
            throw DimensionError("Trajectory: dt must be positive");
        if (!states.allFinite()) throw DimensionError("Trajectory: non-finite sample");
    }
};

inline bool finite(const StateVector& s) { return s.allFinite(); }

}  // namespace cislunar
