#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cislunar/embedding.hpp"

namespace cislunar {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// A periodic discrete signal written as a sum of complex exponentials
/// x(k) = sum_m coefficients[m] * exp(i * frequencies[m] * k).
struct HarmonicSignal {
    std::vector<double> frequencies;             // rad/sample, in [-pi, pi)
    std::vector<std::complex<double>> coefficients;
    Index length = 0;                            // samples per period (N)
};

/// Discrete Fourier analysis of one period of a signal: coefficients at the
/// N canonical frequencies 2*pi*m/N (mapped into [-pi, pi)), normalized so
/// that synthesis reproduces the input.
HarmonicSignal fourier_coefficients(const VectorXd& signal);

/// Synthesis (inverse transform) of `count` samples starting at k = 0.
VectorXcd harmonic_eval(const HarmonicSignal& signal, Index count);

/// Linear recurrence x(k+l) = sum_i alphas[i] * x(k+i) satisfied by every
/// exponential in a frequency set.
struct ArModel {
    VectorXcd alphas;  // length = order
    Index order = 0;
    bool rank_deficient = false;  // order exceeded the frequency count
    double residual = 0.0;        // worst recurrence defect over the inputs

    /// True when every coefficient is real to within tol (conjugate-closed
    /// frequency sets give real recurrences).
    bool is_real(double tol = 1e-9) const;
};

/// Least-squares AR parameters for the given exponential frequencies
/// (rad/sample): the minimum-norm solution of the Vandermonde system
/// V alpha = y with V(m, i) = exp(i w_m i), y(m) = exp(i w_m l).
/// Frequencies closer than dedup_tol are merged first.
ArModel ar_parameters(const std::vector<double>& frequencies, Index order,
                      double dedup_tol = 1e-12, double pinv_tol = 1e-10);

/// Companion matrix of the recurrence: ones on the subdiagonal, alphas in
/// the last column. Its eigenvalues include every exp(i w_m) of the
/// generating set.
MatrixXcd companion_matrix(const ArModel& model);

/// Eigenvalues of the companion matrix, for spectral cross-checks.
VectorXcd companion_eigenvalues(const ArModel& model);

}  // namespace cislunar
