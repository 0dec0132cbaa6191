#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgfr/graphs.hpp"

namespace pgfr {

/// Cycle C_n as Cay(Z_n, {1, n-1}); n >= 3.
CayleyGraph cycle(std::int64_t n);
/// Complement of C_n: Cay(Z_n, Z_n minus {0, 1, n-1}); n >= 3.
CayleyGraph complement_cycle(std::int64_t n);
/// Complete graph K_n as Cay(Z_n, Z_n minus {0}); n >= 2.
CayleyGraph complete(std::int64_t n);

/// Family output whose defining hypothesis is computed rather than assumed.
struct FlaggedGraph {
    CayleyGraph graph;
    bool hypothesis_ok;
};

/// Circulant on Z_{2p^s} with connection set {p^k, n - p^k : k in ks};
/// p an odd prime, 0 = k_0 < ... < k_m < s. The flag is gcd(p, m+1) == 1.
FlaggedGraph prime_power_circulant(std::int64_t p, std::int64_t s,
                                   const std::vector<std::int64_t>& ks);

/// Circulant on Z_{2p^s} with connection set {y, n - y : y in ys}; p an odd
/// prime. The flag is gcd(p, number of odd ys) == 1.
FlaggedGraph parity_split_circulant(std::int64_t p, std::int64_t s,
                                    const std::vector<std::int64_t>& ys);

/// Circulant on Z_{2p^s}, p prime > 3, with connection set
/// {1, 3, p^s - 3, 2p^s - 1, 2p^s - 3, p^s + 3}.
CayleyGraph near_cycle_circulant(std::int64_t p, std::int64_t s);

/// Graph together with a designated vertex pair (a = identity).
struct PairedGraph {
    CayleyGraph graph;
    std::int64_t a;
    std::int64_t b;
};

/// Complement of Cay(Z_{2p^s}^h, {(+-y, 0, ..., 0) : y in ys}) with the pair
/// b - a = (p^s, 0, ..., 0); p odd prime, s > 1, h > 1, gcd(p, #odd ys) == 1.
PairedGraph product_line_complement(std::int64_t p, std::int64_t s, std::int64_t h,
                                    const std::vector<std::int64_t>& ys);

/// Complement of Cay(Z_2 + Z_p^s, S) where S holds the order-two generator
/// and all non-zero multiples of the first Z_p generator; pair
/// b - a = (1, 0, ..., 0). p odd prime, s > 1.
PairedGraph two_by_prime_power_complement(std::int64_t p, std::int64_t s);

/// Complement of Cay(Z_2^m, {1110..., 0110..., 1100...}) with the pair
/// b - a = all-ones; m > 3.
PairedGraph boolean_cube_complement(std::int64_t m);

enum class Expectation { Yes, No, Unlabeled };

/// One labeled regression instance: a graph, a vertex pair, and the expected
/// exact verdicts. Unlabeled entries are exploratory and never gate anything.
struct CorpusCase {
    std::string name;
    CayleyGraph graph;
    std::int64_t a;
    std::int64_t b;
    Expectation expect_pgfr;
    Expectation expect_fr;
    std::string provenance;
};

/// The full labeled regression corpus.
std::vector<CorpusCase> corpus();

}  // namespace pgfr
