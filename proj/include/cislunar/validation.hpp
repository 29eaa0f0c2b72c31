#pragma once

#include <vector>

#include "cislunar/system.hpp"

namespace cislunar {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class Plane { XY, YZ, ZX };

/// Coordinate whose zero defines the plane (XY -> z, YZ -> x, ZX -> y).
Index plane_coordinate(Plane plane);
const char* plane_name(Plane plane);

/// Per-sample normalized 2-norm error between an estimate and the truth:
/// eps(k) = ||xhat(k) - x(k)||_2 / max|truth entry| (global maximum over
/// every component and sample of the truth window).
struct ErrorSeries {
    VectorXd per_sample;
    double max = 0.0;
    double mean = 0.0;
};

enum class ErrorNormalization {
    GlobalMaxAbs,      // max |entry| over the whole truth window (default)
    PerSampleNorm      // ||x(k)|| per sample (diagnostic alternative)
};

ErrorSeries normalized_error(const MatrixXd& estimate, const MatrixXd& truth,
                             ErrorNormalization norm = ErrorNormalization::GlobalMaxAbs);
ErrorSeries normalized_error(const Trajectory& estimate, const Trajectory& truth,
                             ErrorNormalization norm = ErrorNormalization::GlobalMaxAbs);

/// A refined plane crossing: the plane-normal coordinate changes sign at
/// `time`, direction is the sign of that coordinate's rate there.
struct CrossingEvent {
    Plane plane = Plane::XY;
    double time = 0.0;
    StateVector state = StateVector::Zero();
    int direction = 0;  // +1 rising, -1 falling
};

/// Locate every sign change of the plane coordinate between consecutive
/// samples and refine each by bisection on a cubic Hermite interpolant of
/// the stored grid (positions interpolate with their stored velocities).
/// Throws DegenerateDataError when the coordinate never leaves the
/// crossing_tol band (e.g. z for a planar orbit).
std::vector<CrossingEvent> detect_crossings(const Trajectory& traj, Plane plane,
                                            double refine_tol = 1e-9,
                                            double crossing_tol = 1e-8);

struct PeriodEstimate {
    double period = 0.0;
    double dispersion = 0.0;  // max deviation of a gap from the mean
    Index gap_count = 0;
};

/// Mean gap between successive same-direction events (rising and falling
/// sequences measured separately, gaps pooled). Needs >= 3 events.
PeriodEstimate period_from_crossings(const std::vector<CrossingEvent>& events);

/// Recurrence time of the initial crossing: gaps between successive events
/// that share the first event's direction and land within match_radius (LU)
/// of its position. Robust for orbits whose loops cross a plane more than
/// once per period.
PeriodEstimate period_from_recurrence(const std::vector<CrossingEvent>& events,
                                      double match_radius = 0.0);

}  // namespace cislunar
