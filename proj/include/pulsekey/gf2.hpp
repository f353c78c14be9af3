#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <json.hpp>

#include "pulsekey/bits.hpp"

namespace pulsekey {

// Dense binary matrix, row-major, rows packed like BitBlock (bit c of a row is
// column c). Sized for the dimensions this pipeline uses (order 10^2 columns),
// where dense Gaussian elimination on packed words is plenty.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v) words_[r * wpr_ + (c >> 6)] |= mask; else words_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    BitBlock row(std::size_t r) const;
    void set_row(std::size_t r, const BitBlock& b);

    void swap_rows(std::size_t a, std::size_t b);
    void xor_row(std::size_t dst, std::size_t src);   // dst ^= src

    bool operator==(const Gf2Matrix&) const = default;

private:
    friend BitBlock matvec(const Gf2Matrix&, const BitBlock&);

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

// y = M x over GF(2): y_r is the parity of the AND of row r with x.
BitBlock matvec(const Gf2Matrix& m, const BitBlock& x);

// Rank via Gaussian elimination; pivot selection scans rows for the lowest set
// column, so the result is deterministic for a given matrix.
std::size_t rank(const Gf2Matrix& m);

// Uniformly random matrix resampled until it has full row rank. Deterministic
// in the seed. rows > cols cannot be full row rank and throws InvalidDims.
Gf2Matrix random_full_rank(std::size_t rows, std::size_t cols, std::uint64_t seed);

// Basis of { x : Mx = 0 }, one vector per free column in ascending column
// order; size is always cols − rank(m).
std::vector<BitBlock> null_space_basis(const Gf2Matrix& m);

// Any single x with Mx = s (free coordinates forced to 0), or nullopt when the
// system is inconsistent.
std::optional<BitBlock> solve_particular(const Gf2Matrix& m, const BitBlock& s);

// [top; bottom] with matching column counts.
Gf2Matrix vstack(const Gf2Matrix& top, const Gf2Matrix& bottom);

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen);

// JSON wire format: {"rows": R, "cols": C, "row_hex": [...]}, each row in the
// MSB-first hex convention of BitBlock (column 0 = MSB of the first byte).
nlohmann::json matrix_to_json(const Gf2Matrix& m);
Gf2Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json bits_to_json(const BitBlock& b);       // {"bits": n, "hex": "..."}
BitBlock bits_from_json(const nlohmann::json& j);

} // namespace pulsekey
