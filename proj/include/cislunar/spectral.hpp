#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cislunar/dmd.hpp"
#include "cislunar/system.hpp"

namespace cislunar {

/// One retained mode (conjugate pairs collapsed). Frequency and growth rate
/// come from the principal logarithm of the eigenvalue divided by the
/// sampling interval; period is absent for real modes.
struct ModeRecord {
    std::complex<double> eigenvalue;
    double frequency = 0.0;    // rad/TU, >= 0
    double growth_rate = 0.0;  // 1/TU
    std::optional<double> period;  // TU, 2*pi/frequency
    double amplitude_norm = 0.0;   // |b_m| * ||z_m||
    bool is_real = false;
};

struct SpectralSummary {
    std::vector<ModeRecord> modes;
    std::optional<double> fundamental_period;  // TU; absent without oscillatory modes
    bool stable = false;        // all |lambda| <= 1 + stab_tol
    Index dominant_count = 0;   // oscillatory (conjugate-pair) records
    double max_magnitude = 0.0; // largest |lambda|

    /// Fundamental period, throwing when the spectrum carries no
    /// oscillatory mode at all.
    double fundamental_period_or_throw() const;
};

/// Collapse a fitted model's spectrum to per-pair records, fundamental
/// period, and a unit-circle stability verdict. A mode counts as real when
/// |Im log lambda| < freq_tol; the fundamental frequency is the smallest
/// nonzero frequency among modes with amplitude_norm above amp_floor times
/// the largest.
SpectralSummary summarize(const DmdModel& model, double freq_tol = 1e-8, double stab_tol = 1e-6,
                          double amp_floor = 1e-6);

/// One-sided amplitude spectrum on the frequency grid 2*pi*j/(N*dt) rad/TU,
/// j = 0 .. N/2.
struct Spectrum {
    VectorXd frequency;  // rad/TU
    VectorXd amplitude;
    double bin_width() const { return frequency.size() > 1 ? frequency[1] - frequency[0] : 0.0; }
};

/// FFT amplitude spectrum of one state component. pad_to > N zero-pads the
/// signal for finer peak localization (off by default so bin arithmetic in
/// tests stays transparent).
Spectrum fft_spectrum(const Trajectory& traj, Index component, Index pad_to = 0);
Spectrum fft_spectrum(const VectorXd& signal, double dt, Index pad_to = 0);

/// Indices of the K largest local maxima, strongest first.
std::vector<Index> top_peaks(const Spectrum& spec, Index k);

struct SpectrumMatch {
    double max_discrepancy = 0.0;        // worst paired frequency gap (rad/TU)
    Index matched = 0;
    Index unmatched = 0;                 // peaks left without a partner
    std::vector<std::pair<double, double>> pairs;  // (freq_a, freq_b)
};

/// Compare the top-K peak frequencies of two spectra on identical grids;
/// peaks pair greedily by amplitude rank, nearest frequency first.
SpectrumMatch compare_spectra(const Spectrum& a, const Spectrum& b, Index peak_count);

}  // namespace cislunar
