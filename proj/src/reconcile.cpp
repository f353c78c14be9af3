#include "pulsekey/reconcile.hpp"

#include "pulsekey/errors.hpp"

namespace pulsekey {

void CodeConfig::validate() const {
    if (m == 0 || m >= n) throw InvalidParams("code requires 0 < m < n");
    if (w_max < 0) throw InvalidParams("w_max must be non-negative");
}

Gf2Matrix parity_check_for(const CodeConfig& cfg) {
    cfg.validate();
    return random_full_rank(cfg.m, cfg.n, cfg.seed);
}

BitBlock syndrome(const Gf2Matrix& h, const BitBlock& x) {
    return matvec(h, x);
}

SyndromeDecoder::SyndromeDecoder(Gf2Matrix h) : h_(std::move(h)) {
    col_syndromes_.reserve(h_.cols());
    for (std::size_t c = 0; c < h_.cols(); ++c) {
        BitBlock col(h_.rows());
        for (std::size_t r = 0; r < h_.rows(); ++r)
            if (h_.get(r, c)) col.set(r, true);
        col_syndromes_.push_back(std::move(col));
    }
}

void SyndromeDecoder::build_pair_table() const {
    std::size_t n = h_.cols();
    pair_table_.reserve(n * (n - 1) / 2 + n);
    for (std::size_t i = 0; i < n; ++i) {
        pair_table_[hash_value(col_syndromes_[i])].emplace_back(std::uint16_t(i),
                                                                std::uint16_t(0xffff));
        for (std::size_t j = i + 1; j < n; ++j)
            pair_table_[hash_value(col_syndromes_[i] ^ col_syndromes_[j])].emplace_back(
                std::uint16_t(i), std::uint16_t(j));
    }
    pair_table_built_ = true;
}

namespace {

// Ordered enumeration of every size-k index subset of [0, n), with the partial
// syndrome XOR threaded through; visit(indices, partial) is called per subset.
template <typename Visit>
void for_each_subset(std::size_t n, int k, const std::vector<BitBlock>& cols, BitBlock partial,
                     std::vector<std::uint16_t>& indices, std::size_t start, Visit&& visit) {
    if (k == 0) {
        visit(indices, partial);
        return;
    }
    for (std::size_t i = start; i + k <= n; ++i) {
        indices.push_back(std::uint16_t(i));
        for_each_subset(n, k - 1, cols, partial ^ cols[i], indices, i + 1, visit);
        indices.pop_back();
    }
}

} // namespace

std::optional<BitBlock> SyndromeDecoder::search_min_error(const BitBlock& s, int w_max) const {
    std::size_t n = h_.cols();
    if (!s.any()) return BitBlock(n);
    if (w_max < 1) return std::nullopt;

    // Weight 1: direct column scan. Duplicate columns can tie, and the
    // first-to-last bit order makes the highest index the smallest pattern, so
    // keep the last hit rather than the first.
    std::optional<BitBlock> best;
    for (std::size_t i = 0; i < n; ++i) {
        if (col_syndromes_[i] == s) {
            BitBlock e(n);
            e.set(i, true);
            best = std::move(e);
        }
    }
    if (best) return best;

    if (w_max < 2) return std::nullopt;
    if (!pair_table_built_) build_pair_table();

    for (int w = 2; w <= w_max && std::size_t(w) <= n; ++w) {
        std::vector<std::uint16_t> prefix;
        auto consider = [&](const std::vector<std::uint16_t>& idx, const BitBlock& partial) {
            BitBlock want = s ^ partial;
            auto it = pair_table_.find(hash_value(want));
            if (it == pair_table_.end()) return;
            for (auto [j, k] : it->second) {
                bool pair_is_single = (k == 0xffff);
                // We are extending a (w-2)-subset, so only true pairs keep the
                // total weight at w.
                if (pair_is_single) continue;
                if ((col_syndromes_[j] ^ col_syndromes_[k]) != want) continue;   // hash collision
                bool overlap = false;
                for (std::uint16_t a : idx)
                    if (a == j || a == k) { overlap = true; break; }
                if (overlap) continue;
                BitBlock e(n);
                for (std::uint16_t a : idx) e.set(a, true);
                e.set(j, true);
                e.set(k, true);
                if (!best || BitBlock::lex_less(e, *best)) best = std::move(e);
            }
        };
        for_each_subset(n, w - 2, col_syndromes_, BitBlock(h_.rows()), prefix, 0, consider);
        if (best) return best;
    }
    return std::nullopt;
}

BitBlock SyndromeDecoder::decode(const BitBlock& z, const BitBlock& y, int w_max) const {
    if (z.size() != h_.rows()) throw DimensionMismatch("syndrome length != parity rows");
    if (y.size() != h_.cols()) throw DimensionMismatch("word length != parity columns");
    auto e = search_min_error(z ^ matvec(h_, y), w_max);
    if (!e) throw DecodeFailure("no coset member within weight cap of the received word");
    return y ^ *e;
}

BitBlock SyndromeDecoder::eve_decode(const BitBlock& z, int w_max) const {
    if (z.size() != h_.rows()) throw DimensionMismatch("syndrome length != parity rows");
    auto seed = solve_particular(h_, z);
    if (!seed) throw DecodeFailure("syndrome outside the column space of H");
    auto e = search_min_error(z, w_max);
    return e ? *e : *seed;
}

BitBlock decode(const Gf2Matrix& h, const BitBlock& z, const BitBlock& y, int w_max) {
    return SyndromeDecoder(h).decode(z, y, w_max);
}

BitBlock eve_decode(const Gf2Matrix& h, const BitBlock& z, int w_max) {
    return SyndromeDecoder(h).eve_decode(z, w_max);
}

BitBlock exhaustive_decode(const Gf2Matrix& h, const BitBlock& z, const BitBlock& y) {
    if (h.cols() > 24) throw OversizedInstance("exhaustive decode limited to 24 columns");
    if (z.size() != h.rows()) throw DimensionMismatch("syndrome length != parity rows");
    if (y.size() != h.cols()) throw DimensionMismatch("word length != parity columns");

    auto particular = solve_particular(h, z);
    if (!particular) throw DecodeFailure("syndrome outside the column space of H");
    auto basis = null_space_basis(h);

    BitBlock best_word = *particular;
    BitBlock best_err = best_word ^ y;
    for (std::uint64_t mask = 1; mask < (1ull << basis.size()); ++mask) {
        BitBlock w = *particular;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1u) w ^= basis[i];
        BitBlock err = w ^ y;
        if (err.weight() < best_err.weight() ||
            (err.weight() == best_err.weight() && BitBlock::lex_less(err, best_err))) {
            best_word = std::move(w);
            best_err = std::move(err);
        }
    }
    return best_word;
}

} // namespace pulsekey
