#include <doctest.h>

#include <random>

#include "pulsekey/errors.hpp"
#include "pulsekey/reconcile.hpp"

using namespace pulsekey;

namespace {

Gf2Matrix pack(const std::vector<std::vector<int>>& m) {
    Gf2Matrix out(m.size(), m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) out.set(r, c, m[r][c] != 0);
    return out;
}

BitBlock bits(const std::vector<int>& v) { return BitBlock::from_bits(v); }

BitBlock random_bits(std::size_t n, std::mt19937_64& gen) {
    BitBlock b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, gen() & 1);
    return b;
}

} // namespace

TEST_CASE("code config validation") {
    CodeConfig ok{.n = 160, .m = 142, .seed = 1, .w_max = 4};
    ok.validate();
    Gf2Matrix h = parity_check_for(ok);
    CHECK(h.rows() == 142);
    CHECK(h.cols() == 160);
    CHECK(rank(h) == 142);

    CHECK_THROWS_AS((CodeConfig{.n = 8, .m = 8, .seed = 1, .w_max = 4}.validate()), InvalidParams);
    CHECK_THROWS_AS((CodeConfig{.n = 8, .m = 0, .seed = 1, .w_max = 4}.validate()), InvalidParams);
}

TEST_CASE("decode recovers the hand-worked example") {
    Gf2Matrix h = pack({{1, 1, 0}, {0, 1, 1}});
    BitBlock x = bits({1, 0, 1});
    BitBlock z = syndrome(h, x);
    CHECK(z == bits({1, 1}));

    BitBlock y = bits({1, 0, 0});
    BitBlock w = decode(h, z, y, 3);
    CHECK(w == x);                       // error (0,0,1) is the unique weight-1 fix
    CHECK(syndrome(h, w) == z);
}

TEST_CASE("decode edge cases and errors") {
    Gf2Matrix h = pack({{1, 1, 0}, {0, 1, 1}});
    BitBlock y = bits({1, 0, 0});

    CHECK(decode(h, syndrome(h, y), y, 0) == y);   // matching syndrome, zero error
    CHECK_THROWS_AS(decode(h, bits({1, 1}), y, 0), DecodeFailure);
    CHECK_THROWS_AS(decode(pack({{1, 1}}), bits({1}), bits({0, 0}), 0), DecodeFailure);
    CHECK_THROWS_AS(decode(h, bits({1}), y, 1), DimensionMismatch);
    CHECK_THROWS_AS(decode(h, bits({1, 1}), bits({1, 0}), 1), DimensionMismatch);
}

TEST_CASE("exhaustive decode enumerates cosets of the expected size") {
    std::mt19937_64 gen(3);
    Gf2Matrix h = random_full_rank(3, 6, 5);
    auto basis = null_space_basis(h);
    CHECK(basis.size() == 3);            // coset size 2^(n-m) = 8
    CHECK_THROWS_AS(exhaustive_decode(random_full_rank(4, 25, 1), BitBlock(4), BitBlock(25)),
                    OversizedInstance);
    (void)gen;
}

TEST_CASE("bounded and exhaustive decoders agree everywhere on small codes") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Gf2Matrix h = random_full_rank(3, 6, 100 + seed);
        SyndromeDecoder dec(h);
        for (std::uint64_t yv = 0; yv < 64; ++yv) {
            BitBlock y(6);
            for (int i = 0; i < 6; ++i)
                if ((yv >> i) & 1u) y.set(i, true);
            for (std::uint64_t zv = 0; zv < 8; ++zv) {
                BitBlock z(3);
                for (int i = 0; i < 3; ++i)
                    if ((zv >> i) & 1u) z.set(i, true);
                CHECK(dec.decode(z, y, 6) == exhaustive_decode(h, z, y));
            }
        }
    }
}

TEST_CASE("bounded and exhaustive decoders agree on random mid-size instances") {
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 10 + 2 * (gen() % 3);   // 10, 12, 14
        Gf2Matrix h = random_full_rank(n / 2, n, gen());
        SyndromeDecoder dec(h);
        BitBlock y = random_bits(n, gen);
        BitBlock z = random_bits(n / 2, gen);
        CHECK(dec.decode(z, y, int(n)) == exhaustive_decode(h, z, y));
    }
}

TEST_CASE("planted errors within the cap are corrected to a valid nearest member") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 16;
        Gf2Matrix h = random_full_rank(12, n, gen());
        SyndromeDecoder dec(h);
        BitBlock x = random_bits(n, gen);
        BitBlock e(n);
        int w = int(gen() % 3) + 1;
        while (int(e.weight()) < w) e.set(gen() % n, true);
        BitBlock z = syndrome(h, x);
        BitBlock w_hat = dec.decode(z, x ^ e, 3);
        CHECK(syndrome(h, w_hat) == z);
        CHECK((w_hat ^ (x ^ e)).weight() <= e.weight());
    }
}

TEST_CASE("enlarging the cap never increases the decoded distance") {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 12;
        Gf2Matrix h = random_full_rank(6, n, gen());
        SyndromeDecoder dec(h);
        BitBlock y = random_bits(n, gen);
        BitBlock z = random_bits(6, gen);
        std::size_t prev = n + 1;
        for (int cap = 0; cap <= int(n); ++cap) {
            try {
                BitBlock w = dec.decode(z, y, cap);
                std::size_t d = (w ^ y).weight();
                CHECK(d <= prev);
                prev = std::min(prev, d);
            } catch (const DecodeFailure&) {
                CHECK(prev == n + 1);   // once decodable, always decodable
            }
        }
    }
}

TEST_CASE("eve decode returns the minimum-weight coset member when reachable") {
    Gf2Matrix h = pack({{1, 1, 0}, {0, 1, 1}});
    BitBlock z = bits({1, 1});
    CHECK(eve_decode(h, z, 2) == bits({0, 1, 0}));

    // All-zero syndrome: the zero word is the unique weight-0 member.
    CHECK(eve_decode(h, BitBlock(2), 2) == BitBlock(3));

    // In-range caps agree with full enumeration against the zero word.
    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 10;
        Gf2Matrix hr = random_full_rank(5, n, gen());
        BitBlock zr = random_bits(5, gen);
        CHECK(eve_decode(hr, zr, int(n)) == exhaustive_decode(hr, zr, BitBlock(n)));
    }
}

TEST_CASE("eve decode falls back to the particular solution beyond the cap") {
    std::mt19937_64 gen(43);
    for (int trial = 0; trial < 50; ++trial) {
        Gf2Matrix h = random_full_rank(8, 12, gen());
        BitBlock z = random_bits(8, gen);
        BitBlock guess = eve_decode(h, z, 0);
        CHECK(syndrome(h, guess) == z);   // always a coset member, whatever the cap
    }
}
