#include "pulsekey/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "pulsekey/errors.hpp"

namespace pulsekey {

namespace {

constexpr double kCorrelationCap = 1.0 - 1e-12;

void check_same_nonempty(std::size_t nx, std::size_t ny) {
    if (nx != ny) throw LengthMismatch("sequences have different lengths");
    if (nx == 0) throw TooShort("sequences are empty");
}

} // namespace

double disagreement_rate(const BitBlock& a, const BitBlock& b) {
    check_same_nonempty(a.size(), b.size());
    return double((a ^ b).weight()) / double(a.size());
}

double per_symbol_disagreement_pct(const BitBlock& a, const BitBlock& b, int bits_per_symbol) {
    check_same_nonempty(a.size(), b.size());
    if (bits_per_symbol < 1) throw InvalidParams("bits per symbol must be positive");
    if (a.size() % bits_per_symbol != 0)
        throw InvalidParams("stream length is not a whole number of symbols");
    BitBlock diff = a ^ b;
    std::size_t symbols = a.size() / bits_per_symbol;
    double acc = 0.0;
    for (std::size_t s = 0; s < symbols; ++s) {
        std::size_t differing = 0;
        for (int j = 0; j < bits_per_symbol; ++j)
            if (diff.get(s * bits_per_symbol + j)) ++differing;
        acc += double(differing) / bits_per_symbol;
    }
    return 100.0 * acc / double(symbols);
}

double key_rate(std::size_t n, std::size_t m, int bits_per_symbol, double t_mean_s) {
    if (n == 0 || m > n) throw InvalidParams("key rate requires 0 < n and m <= n");
    if (bits_per_symbol < 1) throw InvalidParams("bits per symbol must be positive");
    if (!(t_mean_s > 0.0)) throw InvalidParams("mean interval must be positive");
    return (double(n - m) / double(n)) * double(bits_per_symbol) / t_mean_s;
}

MirEstimate mir_lower_gaussian(const std::vector<double>& x, const std::vector<double>& y,
                               double t_mean_s) {
    check_same_nonempty(x.size(), y.size());
    if (x.size() < 2) throw TooShort("correlation needs at least two pairs");
    if (!(t_mean_s > 0.0)) throw InvalidParams("mean interval must be positive");

    double n = double(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }

    MirEstimate est;
    if (sxx <= 0.0 || syy <= 0.0) return est;   // a constant sequence carries no information
    double rho2 = (sxy * sxy) / (sxx * syy);
    if (rho2 > kCorrelationCap) {
        rho2 = kCorrelationCap;
        est.saturated = true;
    }
    est.bits_per_second = -std::log2(1.0 - rho2) / (2.0 * t_mean_s);
    return est;
}

MirEstimate mir_lower_spectral(const std::vector<double>& x, const std::vector<double>& y,
                               double t_mean_s, std::size_t segment) {
    check_same_nonempty(x.size(), y.size());
    if (!(t_mean_s > 0.0)) throw InvalidParams("mean interval must be positive");
    if (segment < 8) throw InvalidParams("segment length must be at least 8");
    if (x.size() < 16) throw TooShort("spectral estimate needs at least 16 pairs");
    // Coherence from a single segment is identically one; shrink the segment
    // until at least two half-overlapping segments fit.
    while (segment > 8 && x.size() < segment + segment / 2) segment /= 2;

    std::size_t hop = segment / 2;
    std::size_t nseg = (x.size() - segment) / hop + 1;
    std::size_t nfreq = segment / 2;   // positive-frequency bins 1 .. segment/2

    std::vector<double> window(segment);
    for (std::size_t i = 0; i < segment; ++i)
        window[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * double(i) / double(segment - 1));

    std::vector<double> sxx(nfreq, 0.0), syy(nfreq, 0.0);
    std::vector<std::complex<double>> sxy(nfreq, 0.0);
    std::vector<double> wx(segment), wy(segment);
    for (std::size_t s = 0; s < nseg; ++s) {
        const double* px = x.data() + s * hop;
        const double* py = y.data() + s * hop;
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < segment; ++i) {
            mx += px[i];
            my += py[i];
        }
        mx /= double(segment);
        my /= double(segment);
        for (std::size_t i = 0; i < segment; ++i) {
            wx[i] = (px[i] - mx) * window[i];
            wy[i] = (py[i] - my) * window[i];
        }
        for (std::size_t f = 1; f <= nfreq; ++f) {
            std::complex<double> fx = 0, fy = 0;
            for (std::size_t i = 0; i < segment; ++i) {
                double ang = -2.0 * M_PI * double(f) * double(i) / double(segment);
                std::complex<double> w(std::cos(ang), std::sin(ang));
                fx += wx[i] * w;
                fy += wy[i] * w;
            }
            sxx[f - 1] += std::norm(fx);
            syy[f - 1] += std::norm(fy);
            sxy[f - 1] += fx * std::conj(fy);
        }
    }

    MirEstimate est;
    double acc = 0.0;
    std::size_t used = 0;
    for (std::size_t f = 0; f < nfreq; ++f) {
        if (sxx[f] <= 0.0 || syy[f] <= 0.0) continue;
        double c = std::norm(sxy[f]) / (sxx[f] * syy[f]);
        if (c > kCorrelationCap) {
            c = kCorrelationCap;
            est.saturated = true;
        }
        acc += -std::log2(1.0 - c);
        ++used;
    }
    if (used) est.bits_per_second = acc / double(used) / (2.0 * t_mean_s);
    return est;
}

namespace {

// Equal-frequency bin index per element: rank within the sorted order (stable
// in the original index, so ties keep a fixed order) scaled to [0, bins).
std::vector<int> rank_bins(const std::vector<double>& v, int bins) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<int> bin(v.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        bin[order[r]] = int(r * std::size_t(bins) / v.size());
    return bin;
}

} // namespace

double mi_upper_single_symbol(const std::vector<double>& x, const std::vector<double>& y,
                              int bins, double t_mean_s) {
    check_same_nonempty(x.size(), y.size());
    if (bins < 2) throw InvalidParams("need at least two bins");
    if (x.size() < std::size_t(bins)) throw TooShort("fewer samples than bins");
    if (!(t_mean_s > 0.0)) throw InvalidParams("mean interval must be positive");

    std::vector<int> bx = rank_bins(x, bins), by = rank_bins(y, bins);
    std::vector<std::uint64_t> joint(std::size_t(bins) * bins, 0);
    std::vector<std::uint64_t> rows(bins, 0), cols(bins, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        joint[std::size_t(bx[i]) * bins + by[i]]++;
        rows[bx[i]]++;
        cols[by[i]]++;
    }

    double n = double(x.size());
    double mi = 0.0;
    std::size_t nonempty_cells = 0, nonempty_rows = 0, nonempty_cols = 0;
    for (int r = 0; r < bins; ++r)
        if (rows[r]) ++nonempty_rows;
    for (int c = 0; c < bins; ++c)
        if (cols[c]) ++nonempty_cols;
    for (int r = 0; r < bins; ++r)
        for (int c = 0; c < bins; ++c) {
            std::uint64_t cell = joint[std::size_t(r) * bins + c];
            if (!cell) continue;
            ++nonempty_cells;
            double p = cell / n;
            mi += p * std::log2(p * n * n / (double(rows[r]) * double(cols[c])));
        }

    double correction = (double(nonempty_cells) - double(nonempty_rows) - double(nonempty_cols) +
                         1.0) /
                        (2.0 * n * std::numbers::ln2);
    mi -= correction;
    if (mi < 0.0) mi = 0.0;
    return mi / t_mean_s;
}

CapacityBounds secret_key_capacity_bounds(const std::vector<double>& x,
                                          const std::vector<double>& y, double t_mean_s,
                                          int bins) {
    MirEstimate lower = mir_lower_gaussian(x, y, t_mean_s);
    CapacityBounds bounds;
    bounds.lower_bps = lower.bits_per_second;
    bounds.saturated = lower.saturated;
    bounds.upper_bps = mi_upper_single_symbol(x, y, bins, t_mean_s);
    bounds.crossed = bounds.lower_bps > bounds.upper_bps;
    return bounds;
}

} // namespace pulsekey
