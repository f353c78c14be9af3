#include "pulsekey/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pulsekey/errors.hpp"

namespace pulsekey {

namespace {

// Incremental GF(2) row basis; add() reduces the candidate against stored rows
// and accepts it only if a nonzero remainder (new pivot) survives.
class RowBasis {
public:
    bool add(BitBlock v) {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(pivots_[i])) v ^= rows_[i];
        if (!v.any()) return false;
        std::size_t pivot = 0;
        while (!v.get(pivot)) ++pivot;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    std::vector<BitBlock> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace

AmplifierSpec make_privacy_matrix(const Gf2Matrix& h, std::uint64_t seed) {
    if (rank(h) != h.rows()) throw NotFullRank("parity-check matrix is rank deficient");
    std::size_t n = h.cols(), k = n - h.rows();

    RowBasis basis;
    for (std::size_t r = 0; r < h.rows(); ++r) basis.add(h.row(r));

    std::mt19937_64 gen(seed);
    Gf2Matrix a(k, n);
    std::size_t accepted = 0;
    while (accepted < k) {
        Gf2Matrix row = random_matrix(1, n, gen);
        if (basis.add(row.row(0))) {
            a.set_row(accepted, row.row(0));
            ++accepted;
        }
    }
    return AmplifierSpec{std::move(a)};
}

BitBlock extract_key(const AmplifierSpec& amp, const BitBlock& x) {
    return matvec(amp.a, x);
}

SecrecyReport verify_secrecy(const Gf2Matrix& h, const AmplifierSpec& amp, bool exhaustive) {
    if (h.cols() != amp.n()) throw DimensionMismatch("parity and amplifier column counts differ");
    SecrecyReport report;
    report.stacked_full_rank = rank(vstack(h, amp.a)) == h.cols();
    if (!exhaustive) return report;

    std::size_t n = h.cols(), m = h.rows(), k = amp.k();
    if (n > 24) throw OversizedInstance("exhaustive secrecy check limited to 24 input bits");
    if (m + k > 63) throw OversizedInstance("syndrome plus key too wide to enumerate");

    // One pass over all inputs, recording (syndrome, key) as a packed integer;
    // sorting then yields joint counts without a 2^(m+k) table.
    std::vector<std::uint64_t> cells;
    cells.reserve(std::size_t(1) << n);
    BitBlock x(n);
    for (std::uint64_t xv = 0; xv < (1ull << n); ++xv) {
        for (std::size_t i = 0; i < n; ++i) x.set(i, (xv >> i) & 1u);
        std::uint64_t z = matvec(h, x).word(0);
        std::uint64_t key = matvec(amp.a, x).word(0);
        cells.push_back(z << k | key);
    }
    std::sort(cells.begin(), cells.end());

    std::vector<std::uint64_t> key_counts(std::size_t(1) << k, 0);
    std::vector<std::uint64_t> z_counts(std::size_t(1) << m, 0);
    double joint_entropy = 0.0;
    const double total = double(cells.size());

    std::size_t distinct_joint = 0;
    bool joint_counts_equal = true;
    std::uint64_t first_count = 0;
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i;
        while (j < cells.size() && cells[j] == cells[i]) ++j;
        std::uint64_t count = j - i;
        std::uint64_t zv = cells[i] >> k, kv = cells[i] & ((1ull << k) - 1);
        key_counts[kv] += count;
        z_counts[zv] += count;
        double p = double(count) / total;
        joint_entropy -= p * std::log2(p);
        if (distinct_joint == 0) first_count = count;
        if (count != first_count) joint_counts_equal = false;
        ++distinct_joint;
        i = j;
    }

    report.exhaustive_ran = true;
    report.key_marginal_uniform =
        std::all_of(key_counts.begin(), key_counts.end(),
                    [&](std::uint64_t c) { return c == cells.size() >> k; });

    // Conditional uniformity given every syndrome: every (z, key) pair must be
    // attained with one common count, and each syndrome must pair with the full
    // key space.
    report.conditional_uniform =
        joint_counts_equal && distinct_joint == (std::size_t(1) << (m + k)) &&
        std::all_of(z_counts.begin(), z_counts.end(),
                    [&](std::uint64_t c) { return c == cells.size() >> m; });

    double key_entropy = 0.0, z_entropy = 0.0;
    for (std::uint64_t c : key_counts)
        if (c) key_entropy -= (c / total) * std::log2(c / total);
    for (std::uint64_t c : z_counts)
        if (c) z_entropy -= (c / total) * std::log2(c / total);
    report.mi_bits = key_entropy + z_entropy - joint_entropy;
    return report;
}

} // namespace pulsekey
