#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cislunar/dmd.hpp"
#include "cislunar/orbits.hpp"
#include "cislunar/spectral.hpp"
#include "cislunar/system.hpp"
#include "cislunar/validation.hpp"

namespace cislunar {

/// Synthetic multi-harmonic source for pipeline checks: channel c of the
/// signal is mean[c] + sum_m amplitudes[c][m] * cos(frequencies[m] * t +
/// phases[c][m]).
struct SyntheticSource {
    Index dim = 1;
    std::vector<double> frequencies;  // rad/TU
    std::vector<std::vector<double>> amplitudes;
    std::vector<std::vector<double>> phases;  // optional; zeros when empty
    std::vector<double> mean;                 // optional; zeros when empty
};

/// One scenario: a data source plus every knob of the DMD study.
struct ExperimentConfig {
    std::string name = "scenario";

    bool synthetic = false;
    StateVector initial_state = StateVector::Zero();
    SystemConstants constants;
    bool refine_initial_state = true;
    SyntheticSource synth;

    double dt = 0.021;             // sampling interval (TU)
    double train_periods = 10.0;   // W_TRN
    double predict_periods = 20.0; // W_PRED
    Index delays = 0;              // 0 = choose from the delay sweep
    std::vector<Index> delay_sweep;
    std::vector<double> window_sweep;  // training windows in periods
    Truncation truncation;
    double rank_tol = 1e-10;
    double integrator_tol = 1e-12;
    std::string crossing_plane = "auto";
    Index fft_component = 0;
    std::string output_dir = "out";

    void validate() const;
};

ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& config);

/// Source data resolved: reference period found, truth generated over the
/// train + predict horizon.
struct PreparedScenario {
    ExperimentConfig config;
    double period = 0.0;               // reference period (TU)
    StateVector initial_state = StateVector::Zero();  // as propagated
    double refine_residual = 0.0;
    MatrixXd data;                      // full horizon, one column per sample
    Index train_samples = 0;
    bool is_cr3bp = true;

    Trajectory trajectory() const;      // 6-row sources only
    Trajectory training_trajectory() const;
};

PreparedScenario prepare_scenario(const ExperimentConfig& config);

struct DelaySweepRow {
    Index delays = 0;
    Index rank = 0;
    double eps_max = 0.0;
    double eps_mean = 0.0;
};

struct WindowSweepRow {
    double periods = 0.0;
    Index samples = 0;
    Index rank = 0;
    double eps_max = 0.0;
    double eps_mean = 0.0;
};

/// Training-window reconstruction error and fitted rank per delay count
/// (the prediction window is held at zero).
std::vector<DelaySweepRow> sweep_delays(const PreparedScenario& scenario,
                                        const std::vector<Index>& delay_values);

/// Error per training window length at a fixed delay count.
std::vector<WindowSweepRow> sweep_window(const PreparedScenario& scenario,
                                         const std::vector<double>& window_periods,
                                         Index delays);

/// Smallest delay count whose error has reached the sweep's floor (within
/// `factor` of the minimum). This is how "delays required for the smallest
/// reconstruction error" is read off the sweep.
Index stabilization_delay(const std::vector<DelaySweepRow>& rows, double factor = 2.0);

/// Fit on the training window with the scenario's truncation.
DmdModel fit_scenario(const PreparedScenario& scenario, Index delays);

struct PredictionSeries {
    std::vector<double> times;  // TU past the training start
    VectorXd eps;               // normalized error vs truth
};

/// Error of the fitted model over the prediction horizon.
PredictionSeries predict_horizon(const PreparedScenario& scenario, const DmdModel& model);

struct ExperimentReport {
    ExperimentConfig config;
    double reference_period = 0.0;
    StateVector initial_state = StateVector::Zero();
    double refine_residual = 0.0;
    Index delays_used = 0;
    Index rank = 0;
    double train_eps_max = 0.0;
    std::vector<DelaySweepRow> delay_sweep;
    std::vector<WindowSweepRow> window_sweep;
    PredictionSeries prediction;
    SpectralSummary spectral;
    SpectrumMatch spectra_match;
    std::optional<PeriodEstimate> crossing_period;    // same-direction mean gap
    std::optional<PeriodEstimate> recurrence_period;  // initial-crossing recurrence
    std::string plane;
    std::vector<std::string> artifacts;  // files written
};

/// Full reproduction pipeline: propagate, sweep delays and windows, fit,
/// predict, extract spectra, validate the period against plane crossings,
/// and write every table (CSV), plot (SVG), the model and a JSON manifest
/// into the scenario's output directory.
ExperimentReport run_scenario(const ExperimentConfig& config);

/// Pick the crossing plane: honor an explicit request, otherwise the
/// largest-amplitude coordinate that actually changes sign.
Plane resolve_plane(const Trajectory& traj, const std::string& request);

}  // namespace cislunar
