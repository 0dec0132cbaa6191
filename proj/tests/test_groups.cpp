#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pgfr/cyclotomic.hpp"
#include "pgfr/groups.hpp"

using namespace pgfr;

TEST_CASE("group construction computes order and exponent") {
    CHECK(AbelianGroup({4}).order() == 4);
    CHECK(AbelianGroup({4}).exponent() == 4);
    CHECK(AbelianGroup({2, 3}).order() == 6);
    CHECK(AbelianGroup({2, 3}).exponent() == 6);
    CHECK(AbelianGroup({2, 3, 3}).order() == 18);
    CHECK(AbelianGroup({2, 3, 3}).exponent() == 6);

    CHECK_THROWS_AS(AbelianGroup({}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({0}), std::invalid_argument);
}

TEST_CASE("element enumeration is a mixed-radix bijection") {
    AbelianGroup g({2, 3});
    CHECK(g.element_at(0) == GroupElement{{0, 0}});
    CHECK(g.element_at(4) == GroupElement{{1, 1}});
    CHECK(AbelianGroup({4}).element_at(3) == GroupElement{{3}});

    for (std::int64_t r = 0; r < g.order(); ++r) CHECK(g.index_of(g.element_at(r)) == r);
    // index order equals lexicographic element order
    for (std::int64_t r = 1; r < g.order(); ++r)
        CHECK(g.element_at(r).residues > g.element_at(r - 1).residues);

    CHECK_THROWS_AS(g.element_at(6), std::out_of_range);
    CHECK_THROWS_AS(g.element_at(-1), std::out_of_range);
}

TEST_CASE("arithmetic and element orders") {
    AbelianGroup z4({4});
    CHECK(z4.order_of(GroupElement{{2}}) == 2);
    CHECK(z4.neg(GroupElement{{1}}) == GroupElement{{3}});

    AbelianGroup z23({2, 3});
    CHECK(z23.order_of(GroupElement{{1, 0}}) == 2);
    CHECK(z23.order_of(GroupElement{{0, 1}}) == 3);
    CHECK(z23.add(GroupElement{{1, 2}}, GroupElement{{1, 2}}) == GroupElement{{0, 1}});

    CHECK(AbelianGroup({6}).neg(GroupElement{{1}}) == GroupElement{{5}});
    CHECK_THROWS_AS(z4.add(GroupElement{{1}}, GroupElement{{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(z4.validate(GroupElement{{4}}), std::invalid_argument);
}

TEST_CASE("character exponents") {
    AbelianGroup z4({4});
    CHECK(z4.character_exponent(1, GroupElement{{1}}) == 1);

    AbelianGroup g({2, 3});
    const std::int64_t r = g.index_of(GroupElement{{1, 1}});
    CHECK(g.character_exponent(r, GroupElement{{1, 2}}) == 1);  // 1*1*3 + 1*2*2 = 7 = 1 mod 6

    for (std::int64_t x = 0; x < g.order(); ++x)
        CHECK(g.character_exponent(0, g.element_at(x)) == 0);
}

TEST_CASE("characters are homomorphisms and the pairing is symmetric") {
    for (const auto& orders : {std::vector<std::int64_t>{6}, {2, 3}, {4, 2}, {2, 3, 3}}) {
        AbelianGroup g(orders);
        const std::int64_t L = g.exponent();
        for (std::int64_t r = 0; r < g.order(); ++r)
            for (std::int64_t x = 0; x < g.order(); ++x) {
                for (std::int64_t y = 0; y < g.order(); ++y) {
                    GroupElement ex = g.element_at(x), ey = g.element_at(y);
                    const std::int64_t lhs = g.character_exponent(r, g.add(ex, ey));
                    const std::int64_t rhs =
                        (g.character_exponent(r, ex) + g.character_exponent(r, ey)) % L;
                    CHECK(lhs == rhs);
                }
                CHECK(g.character_exponent(r, g.element_at(x)) ==
                      g.character_exponent(x, g.element_at(r)));
            }
        for (std::int64_t x = 0; x < g.order(); ++x)
            CHECK(L % g.order_of(g.element_at(x)) == 0);
    }
}

TEST_CASE("character orthogonality in exact cyclotomic arithmetic") {
    for (const auto& orders : {std::vector<std::int64_t>{5}, {2, 3}, {4, 2}, {2, 3, 3}}) {
        AbelianGroup g(orders);
        for (std::int64_t r = 0; r < g.order(); ++r) {
            std::vector<std::int64_t> exps;
            for (std::int64_t x = 0; x < g.order(); ++x)
                exps.push_back(g.character_exponent(r, g.element_at(x)));
            CyclotomicInteger sum = CyclotomicInteger::from_root_powers(g.exponent(), exps);
            if (r == 0)
                CHECK(as_integer(sum).value() == g.order());
            else
                CHECK(is_zero(sum));
        }
    }
}

TEST_CASE("weights") {
    AbelianGroup g23({2, 3});
    CHECK(weight(GroupElement{{1, 2}}) == 3);
    CHECK(weight_scaled({4}, AbelianGroup({4})) == mpq_class(1));
    CHECK(weight_scaled({2, 0, 3}, AbelianGroup({2, 3, 3})) == mpq_class(2));
    CHECK(weight_scaled({1, 1}, g23) == mpq_class(5, 6));
    CHECK(weight_scaled({-3, 2}, g23) == mpq_class(-5, 6));
    CHECK_THROWS_AS(weight_scaled({1}, g23), std::invalid_argument);
}
