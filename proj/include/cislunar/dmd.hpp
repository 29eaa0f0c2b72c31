#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cislunar/embedding.hpp"
#include "cislunar/system.hpp"

namespace cislunar {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// SVD truncation rule: keep singular values >= rel_tol * sigma_max, or a
/// hard mode count when `rank` is set.
struct Truncation {
    std::optional<Index> rank;
    double rel_tol = 1e-10;

    static Truncation by_tolerance(double tol) { return Truncation{std::nullopt, tol}; }
    static Truncation by_rank(Index r) { return Truncation{r, 1e-10}; }
};

/// Fitted exact-DMD surrogate of a (possibly delay-embedded) snapshot pair.
/// Eigenvalues are per-sample multipliers; modes are the exact DMD modes of
/// the embedded space; amplitudes project the first training column onto
/// the modes.
struct DmdModel {
    MatrixXd a_reduced;      // r x r reduced operator
    VectorXcd eigenvalues;   // r
    MatrixXcd modes;         // (state_dim * delay_dim) x r
    VectorXcd amplitudes;    // r
    Index rank = 0;
    double dt = 0.0;         // sampling interval of the training data
    Index state_dim = 0;     // n
    Index delay_dim = 1;     // l

    Index embed_dim() const { return state_dim * delay_dim; }
};

enum class AmplitudeMethod {
    FirstColumn,  // b = Z^+ x(0)
    LeastSquares  // b from all training columns (diagnostic alternative)
};

/// Fit the SVD-truncated exact-DMD operator on a data pair (X, X').
DmdModel fit(const MatrixXd& X, const MatrixXd& Xp, double dt, Truncation truncation = {},
             Index state_dim = 0, Index delay_dim = 1,
             AmplitudeMethod amplitudes = AmplitudeMethod::FirstColumn);

DmdModel fit(const SnapshotPair& pair, double dt, Truncation truncation = {},
             AmplitudeMethod amplitudes = AmplitudeMethod::FirstColumn);

DmdModel fit(const HankelPair& pair, double dt, Truncation truncation = {},
             AmplitudeMethod amplitudes = AmplitudeMethod::FirstColumn);

/// State prediction x(t) = Re(Z Lambda^(t/dt) b), restricted to the base
/// state block. t is measured from the start of the training window;
/// fractional powers use the principal branch of each eigenvalue's
/// argument. Throws if the conjugate-pair cancellation leaves more than
/// imag_tol * norm of imaginary residue.
VectorXd predict(const DmdModel& model, double t, double imag_tol = 1e-8);

/// Predictions at many times, stacked as columns (state_dim x times.size()).
MatrixXd reconstruct_states(const DmdModel& model, const std::vector<double>& times,
                            double imag_tol = 1e-8);

/// Uniform-grid reconstruction as a Trajectory (requires state_dim == 6).
/// Times are relative to the training start; t0 only labels the output.
Trajectory reconstruct(const DmdModel& model, double t0, Index count, double imag_tol = 1e-8);

/// JSON (de)serialization of a fitted model; the document stores rank, dt,
/// dimensions, eigenvalues/amplitudes as [re, im] pairs, modes as per-mode
/// arrays of [re, im] pairs, and the reduced operator row-major.
std::string to_json(const DmdModel& model);
DmdModel model_from_json(const std::string& text);
void save_model(const DmdModel& model, const std::string& path);
DmdModel load_model(const std::string& path);

}  // namespace cislunar
