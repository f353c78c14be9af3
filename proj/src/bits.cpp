#include "pulsekey/bits.hpp"

#include <bit>

#include "pulsekey/errors.hpp"

namespace pulsekey {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

BitBlock BitBlock::from_bits(const std::vector<int>& bits) {
    BitBlock b(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw InvalidParams("bit values must be 0 or 1");
        b.set(i, bits[i] != 0);
    }
    return b;
}

BitBlock BitBlock::from_hex(const std::string& hex, std::size_t nbits) {
    std::size_t nbytes = (nbits + 7) / 8;
    if (hex.size() != 2 * nbytes)
        throw Error("hex string length " + std::to_string(hex.size()) + " does not match " +
                    std::to_string(nbits) + " bits");
    BitBlock b(nbits);
    for (std::size_t k = 0; k < nbytes; ++k) {
        int hi = hex_digit(hex[2 * k]), lo = hex_digit(hex[2 * k + 1]);
        if (hi < 0 || lo < 0) throw Error("invalid hex digit in bit string");
        std::uint64_t byte = std::uint64_t(hi) << 4 | std::uint64_t(lo);
        for (int j = 0; j < 8; ++j) {
            std::size_t i = 8 * k + j;
            if (i < nbits && ((byte >> (7 - j)) & 1u)) b.set(i, true);
        }
    }
    return b;
}

std::size_t BitBlock::weight() const {
    std::size_t w = 0;
    for (std::uint64_t x : words_) w += std::popcount(x);
    return w;
}

bool BitBlock::any() const {
    for (std::uint64_t x : words_)
        if (x) return true;
    return false;
}

BitBlock& BitBlock::operator^=(const BitBlock& o) {
    if (nbits_ != o.nbits_) throw LengthMismatch("xor of blocks with different lengths");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

bool BitBlock::lex_less(const BitBlock& a, const BitBlock& b) {
    if (a.nbits_ != b.nbits_) throw LengthMismatch("lexicographic compare of different lengths");
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            // Lowest differing bit index decides; whichever block has 0 there
            // reads as the smaller string.
            std::uint64_t mask = diff & (~diff + 1);
            return (a.words_[w] & mask) == 0;
        }
    }
    return false;
}

BitBlock BitBlock::slice(std::size_t start, std::size_t len) const {
    if (start + len > nbits_) throw LengthMismatch("slice out of range");
    BitBlock out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, get(start + i));
    return out;
}

void BitBlock::append(const BitBlock& o) {
    std::size_t base = nbits_;
    nbits_ += o.nbits_;
    words_.resize((nbits_ + 63) / 64, 0);
    for (std::size_t i = 0; i < o.nbits_; ++i)
        if (o.get(i)) set(base + i, true);
}

std::string BitBlock::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::size_t nbytes = (nbits_ + 7) / 8;
    std::string out(2 * nbytes, '0');
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned byte = 0;
        for (int j = 0; j < 8; ++j) {
            std::size_t i = 8 * k + j;
            if (i < nbits_ && get(i)) byte |= 1u << (7 - j);
        }
        out[2 * k] = digits[byte >> 4];
        out[2 * k + 1] = digits[byte & 0xf];
    }
    return out;
}

std::uint64_t hash_value(const BitBlock& b) {
    // splitmix64-style mixing of each word; good enough for decoder tables.
    std::uint64_t h = b.size() * 0x9e3779b97f4a7c15ull;
    for (std::uint64_t x : b.words()) {
        x += 0x9e3779b97f4a7c15ull + h;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        h = x ^ (x >> 31);
    }
    return h;
}

} // namespace pulsekey
