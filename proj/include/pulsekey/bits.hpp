#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pulsekey {

// Fixed-length bit vector packed into 64-bit words. Bit i lives in word i/64 at
// in-word position i%64; unused tail bits of the last word are kept zero so that
// operator== and hashing can work on whole words.
//
// Hex serialization is byte-oriented and MSB-first: bit 0 of the block is the
// most significant bit of the first byte, so a 1x8 block with only bit 0 set
// serializes as "80".
class BitBlock {
public:
    BitBlock() = default;
    explicit BitBlock(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitBlock from_bits(const std::vector<int>& bits);
    static BitBlock from_hex(const std::string& hex, std::size_t nbits);

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }

    std::size_t weight() const;
    bool any() const;

    BitBlock& operator^=(const BitBlock& o);
    friend BitBlock operator^(BitBlock a, const BitBlock& b) { a ^= b; return a; }
    bool operator==(const BitBlock&) const = default;

    // Order by reading bits first to last with '0' < '1'; used for tie-breaking
    // between equal-weight decode candidates.
    static bool lex_less(const BitBlock& a, const BitBlock& b);

    BitBlock slice(std::size_t start, std::size_t len) const;
    void append(const BitBlock& o);

    std::string to_hex() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::uint64_t word(std::size_t w) const { return w < words_.size() ? words_[w] : 0; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// 64-bit mix of the contents, for hash tables keyed on syndromes.
std::uint64_t hash_value(const BitBlock& b);

} // namespace pulsekey
