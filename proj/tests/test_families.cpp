#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pgfr/deciders.hpp"
#include "pgfr/families.hpp"

using namespace pgfr;

namespace {

std::set<std::int64_t> circulant_set(const CayleyGraph& g) {
    std::set<std::int64_t> s;
    for (const auto& y : g.connection()) s.insert(y.residues[0]);
    return s;
}

const CorpusCase* find_case(const std::vector<CorpusCase>& cases, const std::string& name) {
    for (const auto& c : cases)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("base constructors") {
    CHECK(circulant_set(cycle(6)) == std::set<std::int64_t>{1, 5});
    CHECK(circulant_set(complement_cycle(6)) == std::set<std::int64_t>{2, 3, 4});
    CHECK(complete(2).degree() == 1);
    CHECK(complete(5).degree() == 4);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(complete(1), std::invalid_argument);
}

TEST_CASE("prime power circulants") {
    FlaggedGraph a = prime_power_circulant(3, 1, {0});
    CHECK(circulant_set(a.graph) == std::set<std::int64_t>{1, 5});  // C6
    CHECK(a.hypothesis_ok);

    FlaggedGraph b = prime_power_circulant(3, 2, {0, 1});
    CHECK(b.graph.order() == 18);
    CHECK(circulant_set(b.graph) == std::set<std::int64_t>{1, 3, 15, 17});
    CHECK(b.hypothesis_ok);  // gcd(3, 2) = 1

    FlaggedGraph c = prime_power_circulant(5, 2, {0, 1});
    CHECK(c.graph.order() == 50);
    CHECK(circulant_set(c.graph) == std::set<std::int64_t>{1, 5, 45, 49});

    FlaggedGraph d = prime_power_circulant(3, 3, {0, 1, 2});
    CHECK(!d.hypothesis_ok);  // gcd(3, 3) = 3

    CHECK_THROWS_AS(prime_power_circulant(4, 1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(prime_power_circulant(3, 2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(prime_power_circulant(3, 2, {0, 2}), std::invalid_argument);
}

TEST_CASE("parity split circulants") {
    FlaggedGraph a = parity_split_circulant(5, 1, {1, 3});
    CHECK(a.graph.order() == 10);
    CHECK(circulant_set(a.graph) == std::set<std::int64_t>{1, 3, 7, 9});
    CHECK(a.hypothesis_ok);  // two odd elements, gcd(5, 2) = 1

    FlaggedGraph b = parity_split_circulant(3, 2, {1, 2});
    CHECK(circulant_set(b.graph) == std::set<std::int64_t>{1, 2, 16, 17});
    CHECK(b.hypothesis_ok);  // one odd element

    FlaggedGraph c = parity_split_circulant(3, 2, {1, 3, 5});
    CHECK(!c.hypothesis_ok);  // three odd elements, gcd(3, 3) = 3

    CHECK_THROWS_AS(parity_split_circulant(5, 1, {10}), std::invalid_argument);  // zero mod n
}

TEST_CASE("near cycle circulants") {
    CHECK(circulant_set(near_cycle_circulant(5, 1)) == std::set<std::int64_t>{1, 2, 3, 7, 8, 9});
    CHECK(circulant_set(near_cycle_circulant(7, 1)) ==
          std::set<std::int64_t>{1, 3, 4, 10, 11, 13});
    CHECK(circulant_set(near_cycle_circulant(5, 2)) ==
          std::set<std::int64_t>{1, 3, 22, 28, 47, 49});
    CHECK_THROWS_AS(near_cycle_circulant(3, 1), std::invalid_argument);
}

TEST_CASE("product line complement") {
    PairedGraph pg = product_line_complement(3, 2, 2, {1});
    CHECK(pg.graph.order() == 324);
    CHECK(pg.graph.group().orders() == std::vector<std::int64_t>{18, 18});
    CHECK(pg.graph.degree() == 324 - 1 - 2);  // complement of a degree-2 base
    CHECK(pg.a == 0);
    CHECK(pg.graph.group().element_at(pg.b) == GroupElement{{9, 0}});

    // 15 = -3 mod 18, so {1, 3, 15} closes to the four elements {1, 3, 15, 17}
    PairedGraph multi = product_line_complement(3, 2, 2, {1, 3, 15});
    CHECK(multi.graph.degree() == 324 - 1 - 4);

    CHECK_THROWS_AS(product_line_complement(3, 1, 2, {1}), std::invalid_argument);  // s = 1
    CHECK_THROWS_AS(product_line_complement(3, 2, 1, {1}), std::invalid_argument);  // h = 1
    CHECK_THROWS_AS(product_line_complement(3, 2, 2, {2}), std::invalid_argument);  // no odd y
}

TEST_CASE("two by prime power complement") {
    PairedGraph pg = two_by_prime_power_complement(3, 2);
    CHECK(pg.graph.group().orders() == std::vector<std::int64_t>{2, 3, 3});
    CHECK(pg.graph.order() == 18);
    CHECK(pg.graph.degree() == 18 - 1 - 3);  // base degree p = 3
    CHECK(pg.graph.group().element_at(pg.b) == GroupElement{{1, 0, 0}});

    // eigenvalue table of the complement: {2p^s-1-p} and {-1-p, -1, 1-p, 1}
    const Spectrum& s = pg.graph.spectrum();
    CHECK(as_integer(s.exact[0]).value() == 14);
    std::set<long> seen;
    for (std::size_t r = 1; r < s.exact.size(); ++r)
        seen.insert(static_cast<long>(as_integer(s.exact[r]).value().get_si()));
    CHECK(seen == std::set<long>{-4, -2, -1, 1});

    PairedGraph p5 = two_by_prime_power_complement(5, 2);
    CHECK(p5.graph.group().orders() == std::vector<std::int64_t>{2, 5, 5});
    CHECK(p5.graph.order() == 50);

    CHECK_THROWS_AS(two_by_prime_power_complement(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(two_by_prime_power_complement(2, 2), std::invalid_argument);
}

TEST_CASE("boolean cube complement") {
    PairedGraph m4 = boolean_cube_complement(4);
    CHECK(m4.graph.order() == 16);
    CHECK(m4.graph.degree() == 15 - 3);
    CHECK(m4.graph.group().element_at(m4.b) == GroupElement{{1, 1, 1, 1}});

    PairedGraph m5 = boolean_cube_complement(5);
    CHECK(m5.graph.order() == 32);
    CHECK(m5.graph.degree() == 31 - 3);

    CHECK_THROWS_AS(boolean_cube_complement(3), std::invalid_argument);
}

TEST_CASE("corpus holds the pinned regression cases") {
    std::vector<CorpusCase> cases = corpus();
    CHECK(cases.size() >= 35);

    struct Want {
        const char* name;
        Expectation pgfr, fr;
    };
    const Want wants[] = {
        {"cycle-6", Expectation::Yes, Expectation::Yes},
        {"cycle-10", Expectation::Yes, Expectation::No},
        {"cycle-18", Expectation::Yes, Expectation::No},
        {"cycle-50", Expectation::Yes, Expectation::No},
        {"cycle-30", Expectation::No, Expectation::No},
        {"cycle-42", Expectation::No, Expectation::No},
        {"cycle-60", Expectation::No, Expectation::No},
        {"cycle-12", Expectation::No, Expectation::No},
        {"cycle-24", Expectation::No, Expectation::No},
        {"cycle-36", Expectation::No, Expectation::No},
        {"cycle-4", Expectation::Yes, Expectation::Yes},
        {"cycle-8", Expectation::Yes, Expectation::No},
        {"complement-cycle-6", Expectation::Yes, Expectation::Unlabeled},
        {"complement-cycle-18", Expectation::Yes, Expectation::No},
        {"complement-cycle-50", Expectation::Yes, Expectation::No},
        {"complement-cycle-24", Expectation::No, Expectation::No},
        {"complement-cycle-48", Expectation::No, Expectation::No},
        {"complement-cycle-30", Expectation::No, Expectation::No},
        {"complement-cycle-10", Expectation::Unlabeled, Expectation::No},
        {"complete-2", Expectation::Yes, Expectation::Unlabeled},
        {"complete-4", Expectation::No, Expectation::Unlabeled},
        {"complete-6", Expectation::No, Expectation::Unlabeled},
        {"complete-8", Expectation::No, Expectation::Unlabeled},
        {"near-cycle-10", Expectation::Yes, Expectation::No},
        {"near-cycle-14", Expectation::Yes, Expectation::No},
        {"parity-10", Expectation::Yes, Expectation::Unlabeled},
        {"parity-10-complement", Expectation::Yes, Expectation::Unlabeled},
        {"powers-3^2", Expectation::Yes, Expectation::Unlabeled},
        {"powers-5^2", Expectation::Yes, Expectation::Unlabeled},
        {"powers-3^2-complement", Expectation::Yes, Expectation::Unlabeled},
        {"powers-5^2-complement", Expectation::Yes, Expectation::Unlabeled},
        {"product-line-18x18", Expectation::Yes, Expectation::Unlabeled},
        {"two-by-3^2", Expectation::Yes, Expectation::Yes},
        {"two-by-5^2", Expectation::Yes, Expectation::Yes},
        {"cube-4", Expectation::No, Expectation::Unlabeled},
        {"cube-5", Expectation::No, Expectation::Unlabeled},
    };
    for (const Want& w : wants) {
        const CorpusCase* c = find_case(cases, w.name);
        REQUIRE_MESSAGE(c != nullptr, w.name);
        CHECK(c->expect_pgfr == w.pgfr);
        CHECK(c->expect_fr == w.fr);
        CHECK(!c->provenance.empty());
        CHECK(c->a != c->b);
    }
}

TEST_CASE("corpus verdicts are reproduced by the deciders") {
    for (const auto& c : corpus()) {
        if (c.expect_pgfr != Expectation::Unlabeled) {
            PgfrVerdict v = decide_pgfr(c.graph, c.a, c.b);
            CHECK_MESSAGE((v.outcome == PgfrVerdict::Outcome::Yes) ==
                              (c.expect_pgfr == Expectation::Yes),
                          c.name);
        }
        if (c.expect_fr != Expectation::Unlabeled) {
            FrVerdict v = decide_fr(c.graph, c.a, c.b);
            CHECK_MESSAGE((v.outcome == FrVerdict::Outcome::Yes) == (c.expect_fr == Expectation::Yes),
                          c.name);
        }
    }
}
