#pragma once

#include <cstddef>
#include <vector>

#include "pulsekey/bits.hpp"

namespace pulsekey {

// Fraction of differing bits in [0, 1].
double disagreement_rate(const BitBlock& a, const BitBlock& b);

// Mean over b-bit symbol groups of (differing bits in group / b), as a
// percentage; equals 100 * disagreement_rate when the length divides evenly.
double per_symbol_disagreement_pct(const BitBlock& a, const BitBlock& b, int bits_per_symbol);

// Distilled secret bits per second: ((n - m) / n) * b / t_mean_s.
double key_rate(std::size_t n, std::size_t m, int bits_per_symbol, double t_mean_s);

struct MirEstimate {
    double bits_per_second = 0.0;
    bool saturated = false;   // correlation/coherence hit the clamp at 1 - 1e-12
};

// Second-order lower bound on the mutual information rate from the zero-lag
// sample correlation: -log2(1 - rho^2) / (2 t). Exact for jointly Gaussian
// pairs, a lower bound otherwise. rho^2 is clamped to 1 - 1e-12 so identical
// inputs report a large finite value with the saturation flag set.
MirEstimate mir_lower_gaussian(const std::vector<double>& x, const std::vector<double>& y,
                               double t_mean_s);

// Spectral variant: magnitude-squared coherence C(f) from Welch-averaged
// periodograms (Hann window, 50% overlap), averaged as
// mean_f[-log2(1 - C(f))] / (2 t) over positive frequencies. Needs at least
// two segments; single-segment coherence is identically 1.
MirEstimate mir_lower_spectral(const std::vector<double>& x, const std::vector<double>& y,
                               double t_mean_s, std::size_t segment = 256);

// Upper estimate from the single-symbol mutual information: plug-in MI of the
// bins x bins equal-frequency (rank) joint histogram with Miller-Madow bias
// correction, floored at zero, divided by t. Depends on the data only through
// ranks, so it is invariant under strictly monotone per-coordinate transforms.
double mi_upper_single_symbol(const std::vector<double>& x, const std::vector<double>& y,
                              int bins, double t_mean_s);

struct CapacityBounds {
    double lower_bps = 0.0;
    double upper_bps = 0.0;
    bool saturated = false;
    bool crossed = false;   // lower > upper; values are reported as computed
};

// Bundles both estimators; a crossing is flagged, never swapped away.
CapacityBounds secret_key_capacity_bounds(const std::vector<double>& x,
                                          const std::vector<double>& y, double t_mean_s,
                                          int bins = 16);

} // namespace pulsekey
