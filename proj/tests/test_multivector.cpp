#include <random>

#include "cliffga/multivector.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cliffga;

namespace {

Multivector mv(const Signature& sig, const std::string& text) { return parse_mv(sig, text); }

Multivector random_mv(std::mt19937_64& rng, const Signature& sig) {
    Multivector u(sig);
    const std::uint64_t blades = std::uint64_t{1} << sig.n();
    for (int t = 0; t < 4; ++t)
        u.add_term(rng() % blades, Rational(static_cast<int>(rng() % 9) - 4,
                                            1 + static_cast<int>(rng() % 3)));
    return u;
}

}  // namespace

TEST_CASE("ring identities from worked examples") {
    Signature cl10(1, 0);
    CHECK(mv_mul(mv(cl10, "1 + e1"), mv(cl10, "1 - e1")).is_zero());

    // In the quaternions, (e1 e2)^2 = -1.
    Signature cl02(0, 2);
    CHECK(mv_mul(mv(cl02, "e12"), mv(cl02, "e12")) == mv(cl02, "-1"));

    CHECK_THROWS_AS(mv_add(Multivector::scalar(cl10, 1), Multivector::scalar(cl02, 1)),
                    std::invalid_argument);
}

TEST_CASE("multiplication is associative and bilinear over random inputs") {
    std::mt19937_64 rng(4242);
    for (int n = 1; n <= 5; ++n) {
        Signature sig(n > 2 ? n - 2 : n, n > 2 ? 2 : 0);
        for (int trial = 0; trial < 40; ++trial) {
            Multivector u = random_mv(rng, sig), v = random_mv(rng, sig),
                        w = random_mv(rng, sig);
            CHECK(mv_mul(mv_mul(u, v), w) == mv_mul(u, mv_mul(v, w)));
            CHECK(mv_mul(mv_add(u, v), w) == mv_add(mv_mul(u, w), mv_mul(v, w)));
            CHECK(mv_mul(w, mv_add(u, v)) == mv_add(mv_mul(w, u), mv_mul(w, v)));
        }
    }
}

TEST_CASE("unit element and zero handling") {
    Signature sig(2, 1);
    Multivector one = Multivector::scalar(sig, 1);
    std::mt19937_64 rng(5);
    Multivector u = random_mv(rng, sig);
    CHECK(mv_mul(one, u) == u);
    CHECK(mv_mul(u, one) == u);
    CHECK(mv_scale(u, Rational(0)).is_zero());
    CHECK(format_mv(Multivector(sig)) == "0");
}

TEST_CASE("blade inverse") {
    CHECK(blade_inverse(SignedBlade(1, BladeIndex(1, 1)), Signature(1, 0)) ==
          SignedBlade(1, BladeIndex(1, 1)));
    CHECK(blade_inverse(SignedBlade(1, BladeIndex(1, 1)), Signature(0, 1)) ==
          SignedBlade(-1, BladeIndex(1, 1)));
    CHECK(blade_inverse(SignedBlade(1, BladeIndex(0b11, 2)), Signature(2, 0)) ==
          SignedBlade(-1, BladeIndex(0b11, 2)));
    CHECK_THROWS_AS(blade_inverse(SignedBlade(1, BladeIndex(1, 1)), Signature(0, 0, 1)),
                    std::domain_error);
}

TEST_CASE("involutions on sample inputs") {
    Signature sig(2, 0);
    CHECK(grade_involution(mv(sig, "1 + e1 + e12")) == mv(sig, "1 - e1 + e12"));
    CHECK(reversion(mv(sig, "e12")) == mv(sig, "-e12"));
    CHECK(conjugation(mv(sig, "e1")) == mv(sig, "-e1"));
}

TEST_CASE("involution algebra properties on all blade pairs, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        for (int p = 0; p <= n; ++p) {
            Signature sig(p, n - p);
            const std::uint64_t blades = std::uint64_t{1} << n;
            for (std::uint64_t a = 0; a < blades; ++a) {
                Multivector ea = Multivector::blade(sig, a);
                for (std::uint64_t b = 0; b < blades; ++b) {
                    Multivector eb = Multivector::blade(sig, b);
                    Multivector prod = mv_mul(ea, eb);
                    CHECK(grade_involution(prod) ==
                          mv_mul(grade_involution(ea), grade_involution(eb)));
                    CHECK(reversion(prod) == mv_mul(reversion(eb), reversion(ea)));
                    CHECK(conjugation(prod) == mv_mul(conjugation(eb), conjugation(ea)));
                }
            }
        }
    }
}

TEST_CASE("transposition is an anti-involution, randomized") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        Signature sig(n - n / 2, n / 2);
        for (int trial = 0; trial < 25; ++trial) {
            Multivector u = random_mv(rng, sig), v = random_mv(rng, sig);
            CHECK(transposition(transposition(u)) == u);
            CHECK(transposition(mv_mul(u, v)) ==
                  mv_mul(transposition(v), transposition(u)));
        }
    }
    CHECK_THROWS_AS(transposition(Multivector::scalar(Signature(1, 0, 1), 1)),
                    std::domain_error);
}

TEST_CASE("transposition reduces to reversion on Cl(p,0) and conjugation on Cl(0,q)") {
    for (int n = 1; n <= 6; ++n) {
        Signature pos(n, 0), neg(0, n);
        const std::uint64_t blades = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < blades; ++a) {
            CHECK(transposition(Multivector::blade(pos, a)) ==
                  reversion(Multivector::blade(pos, a)));
            CHECK(transposition(Multivector::blade(neg, a)) ==
                  conjugation(Multivector::blade(neg, a)));
        }
    }
}

TEST_CASE("transposition fixes the canonical primitive idempotent of Cl(1,1)") {
    Signature sig(1, 1);
    Multivector f = mv(sig, "1/2 + 1/2*e1");
    CHECK(mv_mul(f, f) == f);
    CHECK(transposition(f) == f);
}

TEST_CASE("pseudoscalar and center basis") {
    CHECK(center_basis(Signature(1, 1)).size() == 1);
    auto c30 = center_basis(Signature(3, 0));
    REQUIRE(c30.size() == 2);
    CHECK(c30[1].bits == 0b111);

    // beta^2 in Cl(2,0) via the independent oracle.
    auto sq = cliffga::testing::oracle_cmul(0b11, 0b11, Signature(2, 0));
    CHECK(sq.coeff == -1);
    CHECK(blade_square_sign(pseudoscalar(Signature(2, 0)), Signature(2, 0)) == sq.coeff);

    // No blade outside the center basis commutes with all generators, n <= 6.
    for (int n = 1; n <= 6; ++n) {
        for (int p = 0; p <= n; ++p) {
            Signature sig(p, n - p);
            auto basis = center_basis(sig);
            const std::uint64_t blades = std::uint64_t{1} << n;
            for (std::uint64_t a = 0; a < blades; ++a) {
                bool commutes_all = true;
                for (int i = 1; i <= n; ++i) {
                    BladeIndex ab(a, n), ei(std::uint64_t{1} << (i - 1), n);
                    if (twist_sign(ab, ei, sig) != twist_sign(ei, ab, sig))
                        commutes_all = false;
                }
                bool in_basis = false;
                for (const auto& b : basis) in_basis |= b.bits == a;
                CHECK(commutes_all == in_basis);
            }
        }
    }
}

TEST_CASE("parse and format round-trip the wire format") {
    Signature sig(1, 1);
    CHECK(format_mv(mv(sig, "1/2 + 1/2*e1")) == "1/2 + 1/2*e1");
    CHECK(format_mv(mv(sig, "-e12 + 2*e2")) == "2*e2 - e12");
    CHECK(mv(sig, "2e2") == mv(sig, "2*e2"));

    Signature big(6, 6);
    CHECK(format_mv(parse_mv(big, "e[1,12]")) == "e[1,12]");
    CHECK(parse_mv(Signature(2, 1), "e[1,3]") == Multivector::blade(Signature(2, 1), 0b101));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Signature s(2, 2);
        Multivector u = random_mv(rng, s);
        CHECK(parse_mv(s, format_mv(u)) == u);
    }
}

TEST_CASE("parser reports positions for malformed input") {
    Signature sig(2, 0);
    CHECK_THROWS_AS(parse_mv(sig, ""), ParseError);
    CHECK_THROWS_AS(parse_mv(sig, "e3"), ParseError);   // index out of range
    CHECK_THROWS_AS(parse_mv(sig, "e21"), ParseError);  // non-increasing indices
    CHECK_THROWS_AS(parse_mv(sig, "1/0"), ParseError);  // zero denominator
    CHECK_THROWS_AS(parse_mv(sig, "1 + + e1"), ParseError);
    CHECK_THROWS_AS(parse_mv(sig, "x"), ParseError);
    CHECK_THROWS_AS(parse_mv(Signature(5, 5), "e12"), ParseError);  // compact needs n <= 9
    try {
        parse_mv(sig, "1 + e9");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}
