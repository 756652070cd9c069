#include <random>

#include "cliffga/blades.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cliffga;
using cliffga::testing::oracle_cmul;
using cliffga::testing::oracle_wedge;

namespace {

BladeIndex bl(std::uint64_t bits, int n) { return BladeIndex(bits, n); }

// a_1 is the most significant digit, the reading under which Gray codes of
// consecutive integers differ in one digit.
BladeIndex tuple_msb(std::uint64_t value, int n) {
    std::uint64_t bits = 0;
    for (int i = 1; i <= n; ++i)
        if (value & (std::uint64_t{1} << (n - i))) bits |= std::uint64_t{1} << (i - 1);
    return BladeIndex(bits, n);
}

std::vector<Signature> all_signatures(int n, bool degenerate_too) {
    std::vector<Signature> sigs;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) {
            int r = n - p - q;
            if (r > 0 && !degenerate_too) continue;
            sigs.emplace_back(p, q, r);
        }
    return sigs;
}

}  // namespace

TEST_CASE("oplus is mod-2 componentwise addition") {
    CHECK(oplus(bl(0b000, 3), bl(0b000, 3)).bits == 0b000);
    CHECK(oplus(bl(0b011, 3), bl(0b110, 3)).bits == 0b101);  // 110 (+) 011, a_1 = bit 0
    CHECK(oplus(bl(0b101, 3), bl(0b101, 3)).bits == 0b000);
    CHECK_THROWS_AS(oplus(bl(1, 2), bl(1, 3)), std::invalid_argument);
}

TEST_CASE("walsh function values") {
    const int n = 3;
    for (std::uint64_t b = 0; b < 8; ++b) CHECK(walsh(bl(0, n), bl(b, n)) == 1);
    // w_11(10) and w_11(11), tuples written a_1 a_2.
    CHECK(walsh(bl(0b11, 2), bl(0b01, 2)) == -1);
    CHECK(walsh(bl(0b11, 2), bl(0b11, 2)) == 1);
}

TEST_CASE("walsh is a homomorphism and symmetric, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t m = std::uint64_t{1} << n;
        for (std::uint64_t k = 0; k < m; ++k)
            for (std::uint64_t a = 0; a < m; ++a) {
                CHECK(walsh(bl(a, n), bl(k, n)) == walsh(bl(k, n), bl(a, n)));
                for (std::uint64_t b = 0; b < m; ++b) {
                    CHECK(walsh(bl(k, n), oplus(bl(a, n), bl(b, n))) ==
                          walsh(bl(k, n), bl(a, n)) * walsh(bl(k, n), bl(b, n)));
                }
            }
    }
}

TEST_CASE("gray code values and inverse") {
    // g(000) = 000, g(100) = 110, g(111) = 100 with tuples a_1 a_2 a_3.
    CHECK(gray(bl(0b000, 3)).bits == 0b000);
    CHECK(gray(bl(0b001, 3)).bits == 0b011);
    CHECK(gray(bl(0b111, 3)).bits == 0b001);
    // h(000) = 000, h(110) = 100, h(101) = 110.
    CHECK(gray_inverse(bl(0b000, 3)).bits == 0b000);
    CHECK(gray_inverse(bl(0b011, 3)).bits == 0b001);
    CHECK(gray_inverse(bl(0b101, 3)).bits == 0b011);
}

TEST_CASE("gray code is a group isomorphism with inverse h") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t m = std::uint64_t{1} << n;
        std::vector<bool> hit(m, false);
        for (std::uint64_t k = 0; k < m; ++k) {
            BladeIndex g = gray(bl(k, n));
            CHECK(!hit[g.bits]);
            hit[g.bits] = true;
            CHECK(gray_inverse(g).bits == k);
            CHECK(gray(gray_inverse(bl(k, n))).bits == k);
        }
        for (std::uint64_t a = 0; a < m; ++a)
            for (std::uint64_t b = 0; b < m; ++b)
                CHECK(gray(oplus(bl(a, n), bl(b, n))).bits ==
                      (gray(bl(a, n)).bits ^ gray(bl(b, n)).bits));
    }
}

TEST_CASE("consecutive integers have Gray codes differing in one digit") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t m = std::uint64_t{1} << n;
        for (std::uint64_t v = 0; v + 1 < m; ++v) {
            std::uint64_t g1 = gray(tuple_msb(v, n)).bits;
            std::uint64_t g2 = gray(tuple_msb(v + 1, n)).bits;
            CHECK(std::popcount(g1 ^ g2) == 1);
        }
    }
}

TEST_CASE("twist sign on generators matches the metric") {
    CHECK(twist_sign(bl(1, 1), bl(1, 1), Signature(1, 0)) == 1);   // e_1^2 = +1
    CHECK(twist_sign(bl(1, 1), bl(1, 1), Signature(0, 1)) == -1);  // e_1^2 = -1
    // e_2 e_1 = -e_12 in Cl(2,0).
    CHECK(twist_sign(bl(0b10, 2), bl(0b01, 2), Signature(2, 0)) == -1);
}

TEST_CASE("cmul_blades spec examples") {
    Signature cl11(1, 1);
    CHECK(cmul_blades(bl(0b01, 2), bl(0b01, 2), cl11).coeff == 1);
    CHECK(cmul_blades(bl(0b01, 2), bl(0b01, 2), cl11).blade.bits == 0);
    CHECK(cmul_blades(bl(0b10, 2), bl(0b10, 2), cl11).coeff == -1);

    Signature deg(0, 0, 3);
    CHECK(cmul_blades(bl(0b100, 3), bl(0b100, 3), deg).coeff == 0);

    Signature grassmann(0, 0, 2);
    CmulResult wedge = cmul_blades(bl(0b01, 2), bl(0b10, 2), grassmann);
    CHECK(wedge.coeff == 1);
    CHECK(wedge.blade.bits == 0b11);

    CHECK_THROWS_AS(cmul_blades(bl(0b100, 3), bl(0b100, 3), Signature(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("kernel agrees with the transposition-counting oracle, n <= 5 exhaustive") {
    for (int n = 0; n <= 5; ++n) {
        const std::uint64_t m = std::uint64_t{1} << n;
        for (const Signature& sig : all_signatures(n, true)) {
            for (std::uint64_t a = 0; a < m; ++a)
                for (std::uint64_t b = 0; b < m; ++b) {
                    auto expect = oracle_cmul(a, b, sig);
                    CmulResult got = cmul_blades(bl(a, n), bl(b, n), sig);
                    CHECK(got.coeff == expect.coeff);
                    if (expect.coeff != 0) {
                        CHECK(got.blade.bits == expect.mask);
                        CHECK(got.blade.bits == (a ^ b));  // support rule
                    }
                }
        }
    }
}

TEST_CASE("kernel agrees with the oracle on random pairs, n = 8") {
    std::mt19937_64 rng(20240811);
    const int n = 8;
    const std::uint64_t m = std::uint64_t{1} << n;
    for (const Signature& sig : all_signatures(n, true)) {
        for (int trial = 0; trial < 2000; ++trial) {
            std::uint64_t a = rng() % m, b = rng() % m;
            auto expect = oracle_cmul(a, b, sig);
            CmulResult got = cmul_blades(bl(a, n), bl(b, n), sig);
            CHECK(got.coeff == expect.coeff);
            if (expect.coeff != 0) CHECK(got.blade.bits == expect.mask);
        }
    }
}

TEST_CASE("degenerate product matches the exterior-algebra oracle") {
    for (int n = 1; n <= 5; ++n) {
        Signature sig(0, 0, n);
        const std::uint64_t m = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < m; ++a)
            for (std::uint64_t b = 0; b < m; ++b) {
                auto expect = oracle_wedge(a, b, n);
                CmulResult got = cmul_blades(bl(a, n), bl(b, n), sig);
                CHECK(got.coeff == expect.coeff);
                if (expect.coeff != 0) CHECK(got.blade.bits == expect.mask);
            }
    }
}

TEST_CASE("blade product is associative") {
    for (int n = 0; n <= 5; ++n) {
        const std::uint64_t m = std::uint64_t{1} << n;
        for (const Signature& sig : all_signatures(n, true)) {
            for (std::uint64_t a = 0; a < m; ++a)
                for (std::uint64_t b = 0; b < m; ++b)
                    for (std::uint64_t c = 0; c < m; ++c) {
                        CmulResult ab = cmul_blades(bl(a, n), bl(b, n), sig);
                        CmulResult bc = cmul_blades(bl(b, n), bl(c, n), sig);
                        int lhs_coeff = 0, rhs_coeff = 0;
                        std::uint64_t lhs_mask = 0, rhs_mask = 0;
                        if (ab.coeff != 0) {
                            CmulResult full = cmul_blades(ab.blade, bl(c, n), sig);
                            lhs_coeff = ab.coeff * full.coeff;
                            lhs_mask = full.blade.bits;
                        }
                        if (bc.coeff != 0) {
                            CmulResult full = cmul_blades(bl(a, n), bc.blade, sig);
                            rhs_coeff = bc.coeff * full.coeff;
                            rhs_mask = full.blade.bits;
                        }
                        CHECK(lhs_coeff == rhs_coeff);
                        if (lhs_coeff != 0) CHECK(lhs_mask == rhs_mask);
                    }
        }
    }
    // Randomized spot checks in higher dimension.
    std::mt19937_64 rng(7);
    for (int n : {6, 8, 10}) {
        const std::uint64_t m = std::uint64_t{1} << n;
        Signature sig(n / 2, n - n / 2 - 1, 1);
        for (int trial = 0; trial < 500; ++trial) {
            std::uint64_t a = rng() % m, b = rng() % m, c = rng() % m;
            CmulResult ab = cmul_blades(bl(a, n), bl(b, n), sig);
            CmulResult bc = cmul_blades(bl(b, n), bl(c, n), sig);
            int lhs = ab.coeff, rhs = bc.coeff;
            std::uint64_t lm = 0, rm = 0;
            if (lhs != 0) {
                CmulResult full = cmul_blades(ab.blade, bl(c, n), sig);
                lhs *= full.coeff;
                lm = full.blade.bits;
            }
            if (rhs != 0) {
                CmulResult full = cmul_blades(bl(a, n), bc.blade, sig);
                rhs *= full.coeff;
                rm = full.blade.bits;
            }
            CHECK(lhs == rhs);
            if (lhs != 0) CHECK(lm == rm);
        }
    }
}

TEST_CASE("cocycle gamma: normalization, identity and degenerate rejection") {
    Signature sig(2, 1);
    CHECK(cocycle_gamma(bl(0, 3), bl(0, 3), sig) == 1);
    CHECK_THROWS_AS(cocycle_gamma(bl(0, 3), bl(0, 3), Signature(1, 1, 1)), std::domain_error);
}

TEST_CASE("cocycle condition holds exhaustively for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t m = std::uint64_t{1} << n;
        for (const Signature& sig : all_signatures(n, false)) {
            for (std::uint64_t x = 0; x < m; ++x)
                for (std::uint64_t y = 0; y < m; ++y)
                    for (std::uint64_t z = 0; z < m; ++z) {
                        int lhs = cocycle_gamma(bl(x, n), bl(y, n), sig) *
                                  cocycle_gamma(bl(x ^ y, n), bl(z, n), sig);
                        int rhs = cocycle_gamma(bl(y, n), bl(z, n), sig) *
                                  cocycle_gamma(bl(x, n), bl(y ^ z, n), sig);
                        CHECK(lhs == rhs);
                    }
        }
    }
}

TEST_CASE("blade index validation") {
    CHECK_THROWS_AS(BladeIndex(0b100, 2), std::invalid_argument);
    CHECK(BladeIndex::from_indices({1, 3}, 3).bits == 0b101);
    CHECK_THROWS_AS(BladeIndex::from_indices({0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(BladeIndex::from_indices({2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(SignedBlade(0, bl(1, 1)), std::invalid_argument);
}
