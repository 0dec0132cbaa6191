#include "pgfr/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pgfr {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

CayleyGraph circulant(std::int64_t n, const std::set<std::int64_t>& s) {
    AbelianGroup g({n});
    std::vector<GroupElement> conn;
    for (std::int64_t y : s) conn.push_back(GroupElement{{y}});
    return make_cayley(std::move(g), std::move(conn));
}

}  // namespace

CayleyGraph cycle(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    return circulant(n, {1, n - 1});
}

CayleyGraph complement_cycle(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("complement cycle needs n >= 3");
    return complement(cycle(n));
}

CayleyGraph complete(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    std::set<std::int64_t> s;
    for (std::int64_t y = 1; y < n; ++y) s.insert(y);
    return circulant(n, s);
}

FlaggedGraph prime_power_circulant(std::int64_t p, std::int64_t s,
                                   const std::vector<std::int64_t>& ks) {
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (ks.empty() || ks.front() != 0) throw std::invalid_argument("exponent list must start at 0");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i > 0 && ks[i] <= ks[i - 1])
            throw std::invalid_argument("exponent list must be strictly increasing");
        if (ks[i] >= s) throw std::invalid_argument("exponents must be below s");
    }
    const std::int64_t n = 2 * ipow(p, s);
    std::set<std::int64_t> conn;
    for (std::int64_t k : ks) {
        conn.insert(ipow(p, k));
        conn.insert(n - ipow(p, k));
    }
    const bool ok = std::gcd(p, static_cast<std::int64_t>(ks.size())) == 1;
    return FlaggedGraph{circulant(n, conn), ok};
}

FlaggedGraph parity_split_circulant(std::int64_t p, std::int64_t s,
                                    const std::vector<std::int64_t>& ys) {
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    const std::int64_t n = 2 * ipow(p, s);
    std::set<std::int64_t> conn;
    std::set<std::int64_t> reps;  // one canonical element per {y, n-y} pair
    for (std::int64_t y : ys) {
        const std::int64_t r = ((y % n) + n) % n;
        if (r == 0) throw std::invalid_argument("connection elements must be non-zero");
        reps.insert(r < n - r ? r : n - r);
        conn.insert(r);
        conn.insert(n - r);
    }
    std::int64_t odd_count = 0;
    for (std::int64_t r : reps)
        if (r % 2 == 1) ++odd_count;
    const bool ok = std::gcd(p, odd_count) == 1;
    return FlaggedGraph{circulant(n, conn), ok};
}

CayleyGraph near_cycle_circulant(std::int64_t p, std::int64_t s) {
    if (!is_prime(p) || p <= 3) throw std::invalid_argument("p must be a prime greater than 3");
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    const std::int64_t ps = ipow(p, s);
    const std::int64_t n = 2 * ps;
    return circulant(n, {1, 3, ps - 3, n - 1, n - 3, ps + 3});
}

PairedGraph product_line_complement(std::int64_t p, std::int64_t s, std::int64_t h,
                                    const std::vector<std::int64_t>& ys) {
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (s <= 1) throw std::invalid_argument("s must be > 1");
    if (h <= 1) throw std::invalid_argument("h must be > 1");
    const std::int64_t n1 = 2 * ipow(p, s);
    std::set<std::int64_t> firsts;
    std::set<std::int64_t> reps;
    for (std::int64_t y : ys) {
        const std::int64_t r = ((y % n1) + n1) % n1;
        if (r == 0) throw std::invalid_argument("connection elements must be non-zero");
        reps.insert(r < n1 - r ? r : n1 - r);
        firsts.insert(r);
        firsts.insert(n1 - r);
    }
    std::int64_t odd_count = 0;
    for (std::int64_t r : reps)
        if (r % 2 == 1) ++odd_count;
    if (std::gcd(p, odd_count) != 1)
        throw std::invalid_argument("the odd-element count must be coprime to p");

    AbelianGroup g(std::vector<std::int64_t>(static_cast<std::size_t>(h), n1));
    std::vector<GroupElement> conn;
    for (std::int64_t y : firsts) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(h), 0);
        v[0] = y;
        conn.push_back(GroupElement{std::move(v)});
    }
    CayleyGraph base = make_cayley(g, std::move(conn));

    std::vector<std::int64_t> bv(static_cast<std::size_t>(h), 0);
    bv[0] = ipow(p, s);
    const std::int64_t b = g.index_of(GroupElement{bv});
    return PairedGraph{complement(base), 0, b};
}

PairedGraph two_by_prime_power_complement(std::int64_t p, std::int64_t s) {
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (s <= 1) throw std::invalid_argument("s must be > 1");
    std::vector<std::int64_t> orders{2};
    for (std::int64_t i = 0; i < s; ++i) orders.push_back(p);
    AbelianGroup g(orders);

    std::vector<GroupElement> conn;
    std::vector<std::int64_t> v(orders.size(), 0);
    v[0] = 1;
    conn.push_back(GroupElement{v});
    for (std::int64_t j = 1; j < p; ++j) {
        std::vector<std::int64_t> w(orders.size(), 0);
        w[1] = j;
        conn.push_back(GroupElement{std::move(w)});
    }
    CayleyGraph base = make_cayley(g, std::move(conn));

    std::vector<std::int64_t> bv(orders.size(), 0);
    bv[0] = 1;
    const std::int64_t b = g.index_of(GroupElement{bv});
    return PairedGraph{complement(base), 0, b};
}

PairedGraph boolean_cube_complement(std::int64_t m) {
    if (m <= 3) throw std::invalid_argument("the cube family needs m > 3");
    AbelianGroup g(std::vector<std::int64_t>(static_cast<std::size_t>(m), 2));
    auto bits = [&](std::initializer_list<int> prefix) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(m), 0);
        std::size_t i = 0;
        for (int x : prefix) v[i++] = x;
        return GroupElement{std::move(v)};
    };
    std::vector<GroupElement> conn{bits({1, 1, 1}), bits({0, 1, 1}), bits({1, 1, 0})};
    CayleyGraph base = make_cayley(g, std::move(conn));

    const std::int64_t b = g.order() - 1;  // all-ones has the top index
    return PairedGraph{complement(base), 0, b};
}

namespace {

CorpusCase labeled(std::string name, CayleyGraph graph, std::int64_t a, std::int64_t b,
                   Expectation pgfr, Expectation fr, std::string provenance) {
    return CorpusCase{std::move(name), std::move(graph), a, b, pgfr, fr, std::move(provenance)};
}

}  // namespace

std::vector<CorpusCase> corpus() {
    using E = Expectation;
    std::vector<CorpusCase> cases;

    // Cycles: PGFR exactly when n = 2 * prime^s, between antipodal vertices;
    // FR exactly when n is 4 or 6.
    const std::string cycle_rule = "cycle classification: PGFR iff n = 2*prime^s; FR iff n in {4, 6}";
    for (std::int64_t n : {4, 6, 8, 10, 18, 50}) {
        const E fr = (n == 4 || n == 6) ? E::Yes : E::No;
        cases.push_back(labeled("cycle-" + std::to_string(n), cycle(n), 0, n / 2, E::Yes, fr,
                                cycle_rule + " (n=" + std::to_string(n) + ")"));
    }
    for (std::int64_t n : {30, 42, 60}) {
        // 2pq divides n and the connection set {1, n-1} has no element
        // divisible by p or q, so PGFR is ruled out.
        cases.push_back(labeled("cycle-" + std::to_string(n), cycle(n), 0, n / 2, E::No, E::No,
                                "no PGFR when 2pq | n and no connection element is divisible by p or q (n=" +
                                    std::to_string(n) + ")"));
    }
    for (std::int64_t n : {12, 24, 36}) {
        cases.push_back(labeled("cycle-" + std::to_string(n), cycle(n), 0, n / 2, E::No, E::No,
                                "no PGFR for the p^k circulants on 2^h*p^s vertices with h > 1 (n=" +
                                    std::to_string(n) + ", ks=[0])"));
    }
    {
        AbelianGroup z36({36});
        std::vector<GroupElement> conn{GroupElement{{1}}, GroupElement{{3}}, GroupElement{{33}},
                                       GroupElement{{35}}};
        cases.push_back(labeled("powers-36-k01", make_cayley(z36, std::move(conn)), 0, 18, E::No,
                                E::Unlabeled,
                                "no PGFR for the p^k circulants on 2^h*p^s vertices with h > 1 (n=36, ks=[0,1])"));
    }

    // Complements of cycles.
    const std::string comp_fr_rule = "complement of a cycle has no FR for even n >= 8";
    for (std::int64_t n : {6, 18, 50}) {
        const E fr = n == 6 ? E::Unlabeled : E::No;
        cases.push_back(labeled("complement-cycle-" + std::to_string(n), complement_cycle(n), 0,
                                n / 2, E::Yes, fr,
                                "complement of C_{2p^s} exhibits PGFR (n=" + std::to_string(n) +
                                    "); " + comp_fr_rule));
    }
    cases.push_back(labeled("complement-cycle-10", complement_cycle(10), 0, 5, E::Unlabeled, E::No,
                            comp_fr_rule + " (n=10)"));
    for (std::int64_t n : {24, 48}) {
        cases.push_back(labeled("complement-cycle-" + std::to_string(n), complement_cycle(n), 0,
                                n / 2, E::No, E::No,
                                "complement of C_n has no PGFR for n = 2^h*p^s with h > 2 (n=" +
                                    std::to_string(n) + "); " + comp_fr_rule));
    }
    cases.push_back(labeled("complement-cycle-30", complement_cycle(30), 0, 15, E::No, E::No,
                            "complement of C_n has no PGFR when 2pq | n and no connection element of "
                            "the base cycle is divisible by p or q (n=30); " +
                                comp_fr_rule));

    // Power connection sets on 2 * p^s vertices and their complements.
    for (auto [p, s] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {5, 2}}) {
        FlaggedGraph fg = prime_power_circulant(p, s, {0, 1});
        const std::string tag = std::to_string(p) + "^" + std::to_string(s);
        cases.push_back(labeled("powers-" + tag, fg.graph, 0, fg.graph.order() / 2, E::Yes,
                                E::Unlabeled,
                                "PGFR for {p^k} circulants on 2p^s vertices when gcd(p, m+1) = 1 (p=" +
                                    std::to_string(p) + ", s=" + std::to_string(s) + ", ks=[0,1])"));
        cases.push_back(labeled("powers-" + tag + "-complement", complement(fg.graph), 0,
                                fg.graph.order() / 2, E::Yes, E::Unlabeled,
                                "the complement of a {p^k} circulant on 2p^s vertices also has PGFR (p=" +
                                    std::to_string(p) + ", s=" + std::to_string(s) + ")"));
    }

    // Mixed-parity connection set on 10 vertices and its complement.
    {
        FlaggedGraph fg = parity_split_circulant(5, 1, {1, 3});
        cases.push_back(labeled("parity-10", fg.graph, 0, 5, E::Yes, E::Unlabeled,
                                "PGFR for circulants on 2p^s vertices with gcd(p, #odd elements) = 1 "
                                "(p=5, s=1, ys=[1,3])"));
        cases.push_back(labeled("parity-10-complement", complement(fg.graph), 0, 5, E::Yes,
                                E::Unlabeled,
                                "PGFR for such circulants and their complements (p=5, s=1, ys=[1,3])"));
    }

    // Near-cycle six-element connection sets: PGFR yes, FR no (non-integral).
    cases.push_back(labeled("near-cycle-10", near_cycle_circulant(5, 1), 0, 5, E::Yes, E::No,
                            "the {1,3,p^s-3,...} circulant has PGFR but is non-integral, so no FR "
                            "(p=5, s=1)"));
    cases.push_back(labeled("near-cycle-14", near_cycle_circulant(7, 1), 0, 7, E::Yes, E::No,
                            "the {1,3,p^s-3,...} circulant has PGFR but is non-integral, so no FR "
                            "(p=7, s=1)"));

    // Complete graphs: PGFR only for n = 2.
    cases.push_back(labeled("complete-2", complete(2), 0, 1, E::Yes, E::Unlabeled,
                            "complete graphs exhibit PGFR only for n = 2"));
    for (std::int64_t n : {4, 6, 8})
        cases.push_back(labeled("complete-" + std::to_string(n), complete(n), 0, n / 2, E::No,
                                E::Unlabeled, "complete graphs exhibit PGFR only for n = 2 (n=" +
                                                  std::to_string(n) + ")"));

    // Non-circulant families.
    {
        PairedGraph pg = product_line_complement(3, 2, 2, {1});
        cases.push_back(labeled("product-line-18x18", pg.graph, pg.a, pg.b, E::Yes, E::Unlabeled,
                                "complement of the single-line circulant product on (Z_{2p^s})^h has "
                                "PGFR across (p^s, 0, ..., 0) (p=3, s=2, h=2, ys=[1])"));
    }
    for (std::int64_t p : {3, 5}) {
        PairedGraph pg = two_by_prime_power_complement(p, 2);
        cases.push_back(labeled("two-by-" + std::to_string(p) + "^2", pg.graph, pg.a, pg.b, E::Yes,
                                E::Yes,
                                "complement over Z_2 + Z_p^s has FR across (1, 0, ..., 0) at t = "
                                "2*pi/p (p=" +
                                    std::to_string(p) + ", s=2)"));
    }
    for (std::int64_t m : {4, 5}) {
        PairedGraph pg = boolean_cube_complement(m);
        cases.push_back(labeled("cube-" + std::to_string(m), pg.graph, pg.a, pg.b, E::No,
                                E::Unlabeled,
                                "the boolean-cube complement family has no PGFR between antipodes "
                                "(m=" +
                                    std::to_string(m) + ")"));
    }

    // Exploratory: no classification is known for complement cycles on 4*p^s
    // vertices; reported, never gated.
    cases.push_back(labeled("complement-cycle-36", complement_cycle(36), 0, 18, E::Unlabeled,
                            E::Unlabeled, "open case: complement of C_{4p^s} (n=36)"));

    return cases;
}

}  // namespace pgfr
