#pragma once

#include <cmath>

#include "cislunar/system.hpp"

namespace cislunar {

// Rotating-frame CR3BP with the larger primary at (-mu, 0, 0) and the
// smaller at (1-mu, 0, 0). All functions are templated on the scalar so
// the same expressions can be evaluated in extended precision.

namespace detail {

template <typename Scalar>
struct PrimaryDistances {
    Scalar r1;  // distance to the larger primary
    Scalar r2;  // distance to the smaller primary
};

template <typename Scalar>
PrimaryDistances<Scalar> primary_distances(const Vec3<Scalar>& pos, const SystemConstants& sc) {
    const Scalar mu = static_cast<Scalar>(sc.mu);
    const Scalar x = pos[0], y = pos[1], z = pos[2];
    using std::sqrt;
    PrimaryDistances<Scalar> d;
    d.r1 = sqrt((x + mu) * (x + mu) + y * y + z * z);
    d.r2 = sqrt((x - Scalar(1) + mu) * (x - Scalar(1) + mu) + y * y + z * z);
    // A massless primary (mu = 0 two-body limit) has no singularity.
    const Scalar guard = static_cast<Scalar>(sc.singularity_radius);
    if ((mu < Scalar(1) && !(d.r1 > guard)) || (mu > Scalar(0) && !(d.r2 > guard)))
        throw SingularPositionError("position within singularity guard radius of a primary");
    return d;
}

}  // namespace detail

/// Effective (augmented) potential
///   U = (x^2 + y^2)/2 + (1-mu)/r1 + mu/r2.
template <typename Scalar>
Scalar effective_potential(const Vec3<Scalar>& pos, const SystemConstants& sc) {
    const Scalar mu = static_cast<Scalar>(sc.mu);
    const auto d = detail::primary_distances(pos, sc);
    const Scalar x = pos[0], y = pos[1];
    Scalar u = Scalar(0.5) * (x * x + y * y);
    if (mu < Scalar(1)) u += (Scalar(1) - mu) / d.r1;
    if (mu > Scalar(0)) u += mu / d.r2;
    return u;
}

/// Gradient of the effective potential with respect to position.
template <typename Scalar>
Vec3<Scalar> potential_gradient(const Vec3<Scalar>& pos, const SystemConstants& sc) {
    const Scalar mu = static_cast<Scalar>(sc.mu);
    const auto d = detail::primary_distances(pos, sc);
    const Scalar x = pos[0], y = pos[1], z = pos[2];
    Vec3<Scalar> g;
    g[0] = x;
    g[1] = y;
    g[2] = Scalar(0);
    if (mu < Scalar(1)) {
        const Scalar r13 = d.r1 * d.r1 * d.r1;
        g[0] -= (Scalar(1) - mu) * (x + mu) / r13;
        g[1] -= (Scalar(1) - mu) * y / r13;
        g[2] -= (Scalar(1) - mu) * z / r13;
    }
    if (mu > Scalar(0)) {
        const Scalar r23 = d.r2 * d.r2 * d.r2;
        g[0] -= mu * (x - Scalar(1) + mu) / r23;
        g[1] -= mu * y / r23;
        g[2] -= mu * z / r23;
    }
    return g;
}

/// Equations of motion. The first three components of the result are the
/// state's velocity components, unchanged; the last three are
///   (2*vy + dU/dx, -2*vx + dU/dy, dU/dz).
template <typename Scalar>
Vec6<Scalar> eom(const Vec6<Scalar>& state, const SystemConstants& sc) {
    const Vec3<Scalar> pos = state.template head<3>();
    const Vec3<Scalar> g = potential_gradient(pos, sc);
    Vec6<Scalar> d;
    d[0] = state[3];
    d[1] = state[4];
    d[2] = state[5];
    d[3] = Scalar(2) * state[4] + g[0];
    d[4] = Scalar(-2) * state[3] + g[1];
    d[5] = g[2];
    return d;
}

/// Jacobi integral C = 2U - v^2, conserved along CR3BP motion.
template <typename Scalar>
Scalar jacobi_constant(const Vec6<Scalar>& state, const SystemConstants& sc) {
    const Vec3<Scalar> pos = state.template head<3>();
    const Vec3<Scalar> vel = state.template tail<3>();
    return Scalar(2) * effective_potential(pos, sc) - vel.squaredNorm();
}

}  // namespace cislunar
