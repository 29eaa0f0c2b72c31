#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cislunar/system.hpp"

namespace cislunar {

using Eigen::Index;
using Eigen::MatrixXd;

/// Consecutive snapshot matrices: column j of Xp is the sample one step
/// after column j of X.
struct SnapshotPair {
    MatrixXd X;
    MatrixXd Xp;
};

/// Delay-embedded data matrix. Block row i holds the source matrix shifted
/// i samples ahead: H(i*n + r, c) = X(r, c + i).
struct HankelMatrix {
    MatrixXd H;
    Index delay_dim = 1;  // l
    Index state_dim = 0;  // n
    Index cols() const { return H.cols(); }
};

/// Hankel pair ready for a DMD fit; Hp is H advanced by one sample.
struct HankelPair {
    MatrixXd H;
    MatrixXd Hp;
    Index delay_dim = 1;
    Index state_dim = 0;
};

/// Extract the (X, X') pair of `count` columns starting at sample `start`.
SnapshotPair build_snapshots(const Trajectory& traj, Index start, Index count);

/// Stack l shifted copies of X; result has X.cols() - l + 1 columns.
HankelMatrix build_hankel(const MatrixXd& X, Index l);

/// Build the shifted Hankel pair from a plain data matrix. Both H and Hp
/// get X.cols() - l columns.
HankelPair build_hankel_pair(const MatrixXd& X, Index l);

/// Count singular values >= rank_tol * sigma_max.
Index numerical_rank(const Eigen::VectorXd& singular_values, double rank_tol);
Index numerical_rank(const MatrixXd& A, double rank_tol);

struct DelayScan {
    Index l_min = 0;  // first delay dimension at which H is row-rank-deficient
    Index rank = 0;   // numerical rank detected there
};

/// Scan l = 1, 2, ... over the given trajectory window until the Hankel
/// matrix loses full row rank. For a signal carrying M frequency pairs the
/// rank saturates at 2M (+1 with a nonzero mean) and the scan stops at the
/// first l with n*l above it.
DelayScan min_delay_by_rank(const Trajectory& traj, Index start, Index count,
                            double rank_tol = 1e-10, Index l_max = 512);
DelayScan min_delay_by_rank(const MatrixXd& X, double rank_tol = 1e-10, Index l_max = 512);

struct RankProfilePoint {
    Index delays = 0;
    Index rank = 0;
};

/// Numerical rank of the Hankel embedding for each requested l. When
/// fixed_cols > 0 every embedding uses exactly that many columns so the
/// points are comparable; otherwise each l uses all available columns.
std::vector<RankProfilePoint> rank_profile(const MatrixXd& X, const std::vector<Index>& l_values,
                                           double rank_tol = 1e-10, Index fixed_cols = 0);

/// Smallest l in the profile whose rank reaches the profile's maximum.
Index saturation_delay(const std::vector<RankProfilePoint>& profile);

}  // namespace cislunar
