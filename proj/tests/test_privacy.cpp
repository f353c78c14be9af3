#include <doctest.h>

#include <set>

#include "pulsekey/errors.hpp"
#include "pulsekey/privacy.hpp"
#include "pulsekey/reconcile.hpp"

using namespace pulsekey;

namespace {

Gf2Matrix pack(const std::vector<std::vector<int>>& m) {
    Gf2Matrix out(m.size(), m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) out.set(r, c, m[r][c] != 0);
    return out;
}

} // namespace

TEST_CASE("single-parity example: the key bit is the coset coordinate") {
    Gf2Matrix h = pack({{1, 1}});
    AmplifierSpec amp = make_privacy_matrix(h, 3);
    CHECK(amp.k() == 1);
    CHECK(rank(vstack(h, amp.a)) == 2);

    // The kernel of H is {00, 11}; a valid amplifier row separates it.
    BitBlock k00 = extract_key(amp, BitBlock::from_bits({0, 0}));
    BitBlock k11 = extract_key(amp, BitBlock::from_bits({1, 1}));
    CHECK(!(k00 == k11));

    auto report = verify_secrecy(h, amp, true);
    CHECK(report.ok());
    CHECK(report.mi_bits == 0.0);
}

TEST_CASE("construction is deterministic and rejects rank-deficient parity") {
    Gf2Matrix h = random_full_rank(3, 6, 7);
    CHECK(make_privacy_matrix(h, 9).a == make_privacy_matrix(h, 9).a);
    CHECK_THROWS_AS(make_privacy_matrix(pack({{1, 0}, {1, 0}}), 1), NotFullRank);
}

TEST_CASE("amplifier is injective on each coset") {
    // Words with equal syndrome map to distinct keys, so agreed keys certify
    // exact reconciliation and disagreeing blocks cannot silently collide.
    Gf2Matrix h = random_full_rank(4, 8, 11);
    AmplifierSpec amp = make_privacy_matrix(h, 13);
    for (std::uint64_t zv = 0; zv < 16; ++zv) {
        BitBlock z(4);
        for (int i = 0; i < 4; ++i)
            if ((zv >> i) & 1u) z.set(i, true);
        std::set<std::string> keys;
        std::size_t members = 0;
        for (std::uint64_t xv = 0; xv < 256; ++xv) {
            BitBlock x(8);
            for (int i = 0; i < 8; ++i)
                if ((xv >> i) & 1u) x.set(i, true);
            if (syndrome(h, x) == z) {
                keys.insert(extract_key(amp, x).to_hex());
                ++members;
            }
        }
        CHECK(members == 16);            // coset size 2^(n-m)
        CHECK(keys.size() == members);   // injective on the coset
    }
}

TEST_CASE("exhaustive secrecy verification across random instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Gf2Matrix h = random_full_rank(3, 6, 500 + seed);
        AmplifierSpec amp = make_privacy_matrix(h, 900 + seed);
        auto report = verify_secrecy(h, amp, true);
        CHECK(report.stacked_full_rank);
        CHECK(report.key_marginal_uniform);
        CHECK(report.conditional_uniform);
        CHECK(report.mi_bits == 0.0);
        CHECK(report.ok());
    }
}

TEST_CASE("a leaky amplifier is caught") {
    // Reusing a parity row as the amplifier row makes the key a function of
    // the published syndrome.
    Gf2Matrix h = random_full_rank(3, 4, 21);
    AmplifierSpec leaky{Gf2Matrix(1, 4)};
    leaky.a.set_row(0, h.row(0));
    auto report = verify_secrecy(h, leaky, true);
    CHECK(!report.stacked_full_rank);
    CHECK(!report.ok());
    CHECK(report.mi_bits > 0.9);         // key bit fully determined by z
}

TEST_CASE("structural mode and size guards") {
    Gf2Matrix h = random_full_rank(20, 40, 23);
    AmplifierSpec amp = make_privacy_matrix(h, 25);
    auto report = verify_secrecy(h, amp, false);
    CHECK(report.ok());
    CHECK(!report.exhaustive_ran);
    CHECK_THROWS_AS(verify_secrecy(h, amp, true), OversizedInstance);
    CHECK_THROWS_AS(extract_key(amp, BitBlock(8)), DimensionMismatch);
}
