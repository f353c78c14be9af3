#pragma once

#include <cstdint>

#include "pulsekey/bits.hpp"
#include "pulsekey/gf2.hpp"

namespace pulsekey {

// Key-extraction matrix paired with an m x n parity-check H: a is k x n with
// k = n - m, and the stacked matrix [H; A] has rank n, so x |-> (Hx, Ax) is a
// bijection. Publishing Hx then reveals exactly nothing about Ax.
struct AmplifierSpec {
    Gf2Matrix a;

    std::size_t n() const { return a.cols(); }
    std::size_t k() const { return a.rows(); }
};

// Samples uniformly random rows (deterministic in seed), keeping each row only
// if it increases the rank of [H; rows so far], until n - m rows are gathered.
// Throws NotFullRank when H itself is rank deficient.
AmplifierSpec make_privacy_matrix(const Gf2Matrix& h, std::uint64_t seed);

BitBlock extract_key(const AmplifierSpec& amp, const BitBlock& x);

struct SecrecyReport {
    bool stacked_full_rank = false;
    bool exhaustive_ran = false;
    bool key_marginal_uniform = false;
    bool conditional_uniform = false;
    double mi_bits = 0.0;            // I(key; syndrome) under uniform input

    bool ok() const {
        if (!stacked_full_rank) return false;
        if (!exhaustive_ran) return true;
        return key_marginal_uniform && conditional_uniform && mi_bits == 0.0;
    }
};

// Structural mode checks rank([H; A]) == n. Exhaustive mode additionally
// enumerates all 2^n inputs (n <= 24, OversizedInstance beyond) and verifies
// the key is uniform, uniform conditioned on every syndrome value, and that
// the empirical mutual information between key and syndrome is exactly zero.
SecrecyReport verify_secrecy(const Gf2Matrix& h, const AmplifierSpec& amp, bool exhaustive);

} // namespace pulsekey
