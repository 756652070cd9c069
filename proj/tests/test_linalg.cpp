#include <random>

#include "cliffga/linalg.hpp"
#include "doctest.h"

using namespace cliffga;

namespace {

// Reference rank by plain rational Gaussian elimination.
std::size_t plain_rank(RationalMatrix g) {
    std::size_t rk = 0;
    for (std::size_t col = 0; col < g.cols() && rk < g.rows(); ++col) {
        std::size_t sel = rk;
        while (sel < g.rows() && g.at(sel, col) == 0) ++sel;
        if (sel == g.rows()) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) std::swap(g.at(sel, j), g.at(rk, j));
        for (std::size_t i = rk + 1; i < g.rows(); ++i) {
            Rational f = g.at(i, col) / g.at(rk, col);
            for (std::size_t j = col; j < g.cols(); ++j) g.at(i, j) -= f * g.at(rk, j);
        }
        ++rk;
    }
    return rk;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t nr, std::size_t nc) {
    RationalMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            m.at(i, j) = Rational(static_cast<int>(rng() % 7) - 3,
                                  1 + static_cast<int>(rng() % 4));
    return m;
}

}  // namespace

TEST_CASE("rref rank matches plain elimination and preserves the row space") {
    std::mt19937_64 rng(20240402);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t nr = 1 + rng() % 7, nc = 1 + rng() % 7;
        RationalMatrix m = random_matrix(rng, nr, nc);
        RrefResult r = rref(m);
        CHECK(r.rank == plain_rank(m));
        for (std::size_t i = 0; i < nr; ++i) CHECK(in_row_span(r.mat, m.row(i)));
        CHECK(row_space_equal(m, r.mat));
    }
}

TEST_CASE("nullspace vectors satisfy A v = 0 and count the rank deficiency") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nr = 1 + rng() % 6, nc = 1 + rng() % 6;
        RationalMatrix a = random_matrix(rng, nr, nc);
        auto basis = nullspace(a);
        CHECK(basis.size() == nc - rank(a));
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < nr; ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < nc; ++j) dot += a.at(i, j) * v[j];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("solve returns an exact solution or detects inconsistency") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nr = 1 + rng() % 6, nc = 1 + rng() % 6;
        RationalMatrix a = random_matrix(rng, nr, nc);
        std::vector<Rational> x_true(nc);
        for (auto& v : x_true) v = Rational(static_cast<int>(rng() % 5) - 2);
        std::vector<Rational> b(nr, Rational(0));
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b[i] += a.at(i, j) * x_true[j];

        auto x = solve(a, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < nr; ++i) {
            Rational dot(0);
            for (std::size_t j = 0; j < nc; ++j) dot += a.at(i, j) * (*x)[j];
            CHECK(dot == b[i]);
        }
    }

    RationalMatrix a = RationalMatrix::from_rows({{Rational(1)}, {Rational(1)}});
    CHECK_FALSE(solve(a, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("row space comparison is a set comparison") {
    RationalMatrix a = RationalMatrix::from_rows({
        {Rational(1), Rational(0)},
        {Rational(0), Rational(1)},
    });
    RationalMatrix b = RationalMatrix::from_rows({
        {Rational(1), Rational(1)},
        {Rational(1), Rational(-1)},
    });
    CHECK(row_space_equal(a, b));
    RationalMatrix c = RationalMatrix::from_rows({{Rational(1), Rational(1)}});
    CHECK_FALSE(row_space_equal(a, c));
    CHECK(in_row_span(c, {Rational(2), Rational(2)}));
    CHECK_FALSE(in_row_span(c, {Rational(2), Rational(1)}));
}
