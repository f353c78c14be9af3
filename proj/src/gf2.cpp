#include "pulsekey/gf2.hpp"

#include <bit>

#include "pulsekey/errors.hpp"

namespace pulsekey {

BitBlock Gf2Matrix::row(std::size_t r) const {
    BitBlock out(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) out.set(c, true);
    return out;
}

void Gf2Matrix::set_row(std::size_t r, const BitBlock& b) {
    if (b.size() != cols_) throw DimensionMismatch("row length does not match column count");
    for (std::size_t w = 0; w < wpr_; ++w) words_[r * wpr_ + w] = b.word(w);
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(words_[a * wpr_ + w], words_[b * wpr_ + w]);
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < wpr_; ++w) words_[dst * wpr_ + w] ^= words_[src * wpr_ + w];
}

BitBlock matvec(const Gf2Matrix& m, const BitBlock& x) {
    if (x.size() != m.cols_) throw DimensionMismatch("matvec: vector length != column count");
    BitBlock y(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* row = &m.words_[r * m.wpr_];
        for (std::size_t w = 0; w < m.wpr_; ++w) acc ^= row[w] & x.word(w);
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

namespace {

// Forward elimination into row echelon form. Returns the pivot column of each
// eliminated row, in elimination order.
std::vector<std::size_t> eliminate(Gf2Matrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(next_row, pivot);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, c)) m.xor_row(r, next_row);
        pivot_cols.push_back(c);
        ++next_row;
    }
    return pivot_cols;
}

} // namespace

std::size_t rank(const Gf2Matrix& m) {
    Gf2Matrix work = m;
    return eliminate(work).size();
}

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
    Gf2Matrix m(rows, cols);
    BitBlock row(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) row.set(c, false);
        for (std::size_t w = 0; w * 64 < cols; ++w) {
            std::uint64_t bits = gen();
            for (std::size_t j = 0; j < 64 && w * 64 + j < cols; ++j)
                if ((bits >> j) & 1u) row.set(w * 64 + j, true);
        }
        m.set_row(r, row);
    }
    return m;
}

Gf2Matrix random_full_rank(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    if (rows > cols) throw InvalidDims("cannot have full row rank with rows > cols");
    std::mt19937_64 gen(seed);
    // P(full rank) >= prod_{k>=1}(1 - 2^-k) ~= 0.289 even at rows == cols, so a
    // bounded retry loop terminates in practice; the cap only guards bugs.
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Gf2Matrix m = random_matrix(rows, cols, gen);
        if (rank(m) == rows) return m;
    }
    throw Error("random_full_rank: retry cap exhausted");
}

std::vector<BitBlock> null_space_basis(const Gf2Matrix& m) {
    Gf2Matrix work = m;
    std::vector<std::size_t> pivot_cols = eliminate(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<BitBlock> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitBlock v(m.cols());
        v.set(f, true);
        // Reduced echelon form: row r constrains x[pivot_cols[r]] to the parity
        // of the free coordinates present in that row.
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            if (work.get(r, f)) v.set(pivot_cols[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitBlock> solve_particular(const Gf2Matrix& m, const BitBlock& s) {
    if (s.size() != m.rows()) throw DimensionMismatch("solve_particular: rhs length != row count");
    // Eliminate the augmented matrix [M | s].
    Gf2Matrix work(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) work.set(r, c, true);
        if (s.get(r)) work.set(r, m.cols(), true);
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < work.rows(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < work.rows() && !work.get(pivot, c)) ++pivot;
        if (pivot == work.rows()) continue;
        work.swap_rows(next_row, pivot);
        for (std::size_t r = 0; r < work.rows(); ++r)
            if (r != next_row && work.get(r, c)) work.xor_row(r, next_row);
        pivot_cols.push_back(c);
        ++next_row;
    }
    for (std::size_t r = next_row; r < work.rows(); ++r)
        if (work.get(r, m.cols())) return std::nullopt;

    BitBlock x(m.cols());
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
        if (work.get(r, m.cols())) x.set(pivot_cols[r], true);
    return x;
}

Gf2Matrix vstack(const Gf2Matrix& top, const Gf2Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
    Gf2Matrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) out.set_row(r, top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row(r));
    return out;
}

nlohmann::json matrix_to_json(const Gf2Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_hex());
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"row_hex", rows}};
}

Gf2Matrix matrix_from_json(const nlohmann::json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& hex = j.at("row_hex");
    if (hex.size() != rows) throw Error("row_hex length does not match rows");
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        m.set_row(r, BitBlock::from_hex(hex[r].get<std::string>(), cols));
    return m;
}

nlohmann::json bits_to_json(const BitBlock& b) {
    return {{"bits", b.size()}, {"hex", b.to_hex()}};
}

BitBlock bits_from_json(const nlohmann::json& j) {
    return BitBlock::from_hex(j.at("hex").get<std::string>(), j.at("bits").get<std::size_t>());
}

} // namespace pulsekey
