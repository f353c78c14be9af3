#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pulsekey/bits.hpp"
#include "pulsekey/gf2.hpp"

namespace pulsekey {

// Parameters of one syndrome code instance: block length n, syndrome length m
// (so n - m key bits per block survive amplification), the seed that generated
// the parity-check matrix, and the decoder's error-weight search cap.
struct CodeConfig {
    std::size_t n = 160;
    std::size_t m = 142;
    std::uint64_t seed = 1;
    int w_max = 4;

    void validate() const;   // InvalidParams unless 0 < m < n
};

Gf2Matrix parity_check_for(const CodeConfig& cfg);   // random full-rank m x n

// z = H x for Alice's block x; published over the authenticated channel.
BitBlock syndrome(const Gf2Matrix& h, const BitBlock& x);

// Decoder for a fixed parity-check matrix. Searches error patterns by
// increasing Hamming weight; weights >= 2 are covered by composing enumerated
// (w-2)-subsets with a precomputed table of all weight-1/weight-2 column
// combinations, so the default cap of 4 costs ~C(n,2) table lookups per call.
// The lazily built table makes instances non-thread-safe; use one per thread.
class SyndromeDecoder {
public:
    explicit SyndromeDecoder(Gf2Matrix h);

    const Gf2Matrix& parity_check() const { return h_; }

    // Nearest coset member: w = y ^ e with H e = z ^ H y, e of minimal weight
    // <= w_max, ties broken by lexicographically smallest e. Throws
    // DecodeFailure when no coset member lies within w_max of y.
    BitBlock decode(const BitBlock& z, const BitBlock& y, int w_max) const;

    // Minimum-weight member of {w : Hw = z} reachable by the bounded search,
    // falling back to the Gaussian-elimination particular solution when the
    // search cap is too small to reach the coset. An eavesdropper's best guess
    // with a uniform prior and no side information.
    BitBlock eve_decode(const BitBlock& z, int w_max) const;

private:
    std::optional<BitBlock> search_min_error(const BitBlock& s, int w_max) const;
    void build_pair_table() const;

    Gf2Matrix h_;
    std::vector<BitBlock> col_syndromes_;
    mutable std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint16_t, std::uint16_t>>>
        pair_table_;
    mutable bool pair_table_built_ = false;
};

// One-shot conveniences over a temporary decoder.
BitBlock decode(const Gf2Matrix& h, const BitBlock& z, const BitBlock& y, int w_max);
BitBlock eve_decode(const Gf2Matrix& h, const BitBlock& z, int w_max);

// Full-coset reference decoder: enumerates all 2^(n-rank) members via the null
// space and applies the same minimal-distance / lexicographic-error rule.
// Intentionally a separate code path from SyndromeDecoder so the two can check
// each other; limited to n <= 24 (OversizedInstance).
BitBlock exhaustive_decode(const Gf2Matrix& h, const BitBlock& z, const BitBlock& y);

} // namespace pulsekey
