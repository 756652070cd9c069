#include <array>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "cliffga/finite_group.hpp"
#include "doctest.h"

using namespace cliffga;

namespace {

std::map<int, int> hist(const FiniteGroup& g) { return order_structure(g); }

}  // namespace

TEST_CASE("builtin groups and their order structures") {
    FiniteGroup q8 = builtin(BuiltinName::Q8);
    CHECK(q8.size() == 8);
    CHECK(hist(q8) == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});

    FiniteGroup d8 = builtin(BuiltinName::D8);
    CHECK(hist(d8) == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});

    FiniteGroup v4 = builtin("Z2xZ2");
    CHECK(v4.size() == 4);
    for (int x = 0; x < 4; ++x) CHECK(order_of(v4, x) <= 2);

    CHECK(order_of(builtin("Z4"), 1) == 4);
    CHECK(order_of(q8, q8.identity) == 1);
    CHECK_THROWS_AS(builtin("Z3"), std::invalid_argument);
}

TEST_CASE("table validation rejects broken inputs") {
    // Not a Latin square.
    CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{0, 0}, {1, 1}}),
                    std::invalid_argument);
    // Latin square without a two-sided identity.
    CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b", "c"},
                                            {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}),
                    std::invalid_argument);
    // Latin square with identity but not associative:
    // smallest example is order 5 with a non-group quasigroup structure.
    CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a", "b", "c", "d"},
                                            {{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    std::invalid_argument);
}

TEST_CASE("close_under_product from seeds") {
    FiniteGroup d8 = builtin(BuiltinName::D8);
    // Permutation model of the square's symmetries must close to the same group.
    using Perm = std::array<int, 4>;
    Perm rot{1, 2, 3, 0}, flip{1, 0, 3, 2};
    auto compose = [](const Perm& f, const Perm& g) {
        Perm h{};
        for (int i = 0; i < 4; ++i) h[i] = f[g[i]];
        return h;
    };
    auto label = [](const Perm& f) {
        std::string s;
        for (int v : f) s += static_cast<char>('0' + v);
        return s;
    };
    FiniteGroup closed = close_under_product(std::vector<Perm>{rot, flip}, compose, label);
    CHECK(closed.size() == 8);
    CHECK(is_isomorphic(closed, d8));

    FiniteGroup trivial = close_under_product(
        std::vector<int>{0}, [](int, int) { return 0; },
        [](int) { return std::string("1"); });
    CHECK(trivial.size() == 1);

    CHECK_THROWS_AS(close_under_product(
                        std::vector<int>{1}, [](int a, int b) { return a + b; },
                        [](int v) { return std::to_string(v); }, 16),
                    std::runtime_error);
}

TEST_CASE("center and derived subgroup") {
    FiniteGroup d8 = builtin(BuiltinName::D8);
    CHECK(center(d8).size() == 2);
    FiniteGroup q8 = builtin(BuiltinName::Q8);
    CHECK(derived_subgroup(q8).members == center(q8).members);
    FiniteGroup v4 = builtin(BuiltinName::Z2xZ2);
    CHECK(center(v4).size() == 4);
    CHECK(derived_subgroup(v4).size() == 1);
}

TEST_CASE("cosets, transversal and quotient") {
    FiniteGroup d8 = builtin(BuiltinName::D8);
    Subgroup z = center(d8);
    CHECK(is_normal(d8, z));
    auto cosets = left_cosets(d8, z);
    CHECK(cosets.size() == 4);
    auto reps = transversal(d8, z);
    CHECK(reps.size() == 4);
    CHECK(reps[0] == d8.identity);

    FiniteGroup q = quotient(d8, z).group;
    CHECK(q.size() == 4);
    CHECK(is_isomorphic(q, builtin(BuiltinName::Z2xZ2)));

    Subgroup whole = make_subgroup(d8, [&] {
        std::vector<int> all;
        for (int i = 0; i < d8.size(); ++i) all.push_back(i);
        return all;
    }());
    CHECK(quotient(d8, whole).group.size() == 1);

    // Lagrange for every subgroup of D8.
    for (const Subgroup& h : all_subgroups(d8))
        CHECK(transversal(d8, h).size() * h.members.size() ==
              static_cast<std::size_t>(d8.size()));

    // Quotient by a non-normal subgroup must fail: a reflection generates one.
    Subgroup refl = subgroup_generated(d8, {4});
    CHECK_FALSE(is_normal(d8, refl));
    CHECK_THROWS_AS(quotient(d8, refl), std::invalid_argument);
}

TEST_CASE("conjugacy classes") {
    CHECK(conjugacy_classes(builtin(BuiltinName::Q8)).size() == 5);
    CHECK(conjugacy_classes(builtin(BuiltinName::D8)).size() == 5);
    FiniteGroup z4 = builtin(BuiltinName::Z4);
    CHECK(conjugacy_classes(z4).size() == 4);
}

TEST_CASE("elementary abelian and extra-special predicates") {
    CHECK(is_elementary_abelian(builtin(BuiltinName::Z2xZ2)));
    CHECK(is_elementary_abelian(builtin(BuiltinName::Z2)));
    CHECK_FALSE(is_elementary_abelian(builtin(BuiltinName::Z4)));
    CHECK_FALSE(is_elementary_abelian(builtin(BuiltinName::D8)));
    CHECK(is_extra_special(builtin(BuiltinName::D8)));
    CHECK(is_extra_special(builtin(BuiltinName::Q8)));
    CHECK_FALSE(is_extra_special(builtin(BuiltinName::Z4)));
    CHECK_FALSE(is_extra_special(builtin(BuiltinName::Z2xZ2)));
}

TEST_CASE("derived subgroup properties across small groups") {
    std::vector<FiniteGroup> groups;
    groups.push_back(builtin(BuiltinName::Z4));
    groups.push_back(builtin(BuiltinName::D8));
    groups.push_back(builtin(BuiltinName::Q8));
    groups.push_back(central_product_over_involutions(builtin(BuiltinName::D8),
                                                      builtin(BuiltinName::Q8)));
    for (const FiniteGroup& g : groups) {
        Subgroup derived = derived_subgroup(g);
        CHECK(is_normal(g, derived));
        CHECK(is_abelian(quotient(g, derived).group));
        // G/H abelian implies G' <= H, for every normal subgroup H.
        for (const Subgroup& h : all_subgroups(g)) {
            if (!is_normal(g, h)) continue;
            if (is_abelian(quotient(g, h).group))
                for (int m : derived.members) CHECK(h.contains(m));
        }
    }
}

TEST_CASE("central products") {
    FiniteGroup q8 = builtin(BuiltinName::Q8);
    FiniteGroup d8 = builtin(BuiltinName::D8);

    FiniteGroup qq = central_product_over_involutions(q8, q8);
    CHECK(qq.size() == 32);
    FiniteGroup dd = central_product_over_involutions(d8, d8);
    FiniteGroup dq = central_product_over_involutions(d8, q8);
    CHECK(is_isomorphic(qq, dd));
    CHECK_FALSE(is_isomorphic(dd, dq));

    // Extra-special groups from iterated central products have order p^(2n+1).
    CHECK(is_extra_special(dd));
    CHECK(is_extra_special(dq));
    FiniteGroup ddd = central_product_over_involutions(dd, d8);
    CHECK(ddd.size() == 128);
    CHECK(is_extra_special(ddd));

    // H o {1}-style degenerate amalgamation: Z2 against the center of H.
    FiniteGroup h_ext = central_product_over_involutions(d8, builtin(BuiltinName::Z2));
    CHECK(is_isomorphic(h_ext, d8));

    // |H o K| = |H||K|/|H1| in general.
    Subgroup zq = center(q8);
    FiniteGroup big = central_product_amalgamating(q8, q8, zq, zq);
    CHECK(big.size() == 32);
    CHECK(is_isomorphic(big, qq));

    // theta must be an isomorphism onto a central subgroup.
    Subgroup bad = subgroup_generated(q8, {2});  // <i> is not central
    CHECK_THROWS_AS(central_product_amalgamating(q8, q8, zq, bad), std::invalid_argument);

    // Z4 amalgamation admits two generator choices for theta; the engine
    // builds both, insists they agree up to isomorphism, and returns the
    // first.  Z4 o Z4 over the full centers collapses to Z4.
    FiniteGroup z4 = builtin(BuiltinName::Z4);
    Subgroup whole_z4 = make_subgroup(z4, {0, 1, 2, 3});
    FiniteGroup fused = central_product_amalgamating(z4, z4, whole_z4, whole_z4);
    CHECK(fused.size() == 4);
    CHECK(is_isomorphic(fused, z4));
}

TEST_CASE("isomorphism testing with witnesses") {
    FiniteGroup d8 = builtin(BuiltinName::D8);
    FiniteGroup q8 = builtin(BuiltinName::Q8);
    CHECK_FALSE(is_isomorphic(d8, q8));
    CHECK_FALSE(is_isomorphic(d8, builtin(BuiltinName::Z4)));

    auto witness = find_isomorphism(d8, d8);
    REQUIRE(witness.has_value());
    // The witness was verified by make_hom; re-check bijectivity.
    std::set<int> image(witness->image.begin(), witness->image.end());
    CHECK(image.size() == static_cast<std::size_t>(d8.size()));

    // Reflexive and symmetric on a small suite.
    std::vector<FiniteGroup> suite;
    suite.push_back(builtin(BuiltinName::Z2));
    suite.push_back(builtin(BuiltinName::Z4));
    suite.push_back(builtin(BuiltinName::Z2xZ2));
    suite.push_back(d8);
    suite.push_back(q8);
    for (const auto& a : suite) {
        CHECK(is_isomorphic(a, a));
        for (const auto& b : suite) CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
    }

    // Same order structure does not imply isomorphic: Z4 x Z4 vs Z2 semidirect...
    // cheap stand-in: Z2xZ2 vs Z4 differ already in structure; D8oD8 vs D8oQ8
    // agree on order and center and differ in order structure.
    FiniteGroup dd = central_product_over_involutions(d8, d8);
    FiniteGroup dq = central_product_over_involutions(d8, q8);
    CHECK(hist(dd) != hist(dq));
}

TEST_CASE("group homs are validated") {
    FiniteGroup z4 = builtin(BuiltinName::Z4);
    FiniteGroup z2 = builtin(BuiltinName::Z2);
    CHECK_NOTHROW(make_hom(z4, z2, {0, 1, 0, 1}));
    CHECK_THROWS_AS(make_hom(z4, z2, {0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("csv round trip") {
    FiniteGroup q8 = builtin(BuiltinName::Q8);
    std::stringstream ss;
    q8.to_csv(ss);
    FiniteGroup back = FiniteGroup::from_csv(ss);
    CHECK(back.labels == q8.labels);
    CHECK(back.table == q8.table);
}

TEST_CASE("csv golden fixture for the quaternion table") {
    std::ifstream in(std::string(CLIFFGA_TEST_DATA_DIR) + "/q8_table.csv");
    REQUIRE(in.good());
    FiniteGroup fixed = FiniteGroup::from_csv(in);
    FiniteGroup q8 = builtin(BuiltinName::Q8);
    CHECK(fixed.table == q8.table);
    std::stringstream out;
    q8.to_csv(out);
    std::ifstream again(std::string(CLIFFGA_TEST_DATA_DIR) + "/q8_table.csv");
    std::stringstream golden;
    golden << again.rdbuf();
    CHECK(out.str() == golden.str());
}

TEST_CASE("subgroup validation") {
    FiniteGroup d8 = builtin(BuiltinName::D8);
    CHECK_THROWS_AS(make_subgroup(d8, {0, 1}), std::invalid_argument);  // not closed
    CHECK(make_subgroup(d8, {0, 2}).size() == 2);
    CHECK(subgroup_generated(d8, {1}).size() == 4);
}
