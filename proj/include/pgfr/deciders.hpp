#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pgfr/graphs.hpp"

namespace pgfr {

/// Index classes of a strongly fractionally cospectral pair: x1 holds the r
/// with chi_r(b-a) = +1, x2 those with chi_r(b-a) = -1. Index 0 is always in
/// x1 and the two classes split 0..n-1 evenly.
struct CospectralPartition {
    std::vector<std::int64_t> x1;
    std::vector<std::int64_t> x2;
};

/// Present iff b-a has order two (equivalently, a and b are strongly
/// fractionally cospectral). Throws std::invalid_argument when a == b.
std::optional<CospectralPartition> cospectral_partition(const CayleyGraph& g, std::int64_t a,
                                                        std::int64_t b);

struct PgfrVerdict {
    enum class Outcome { Yes, No };
    enum class Reason { NotCospectral, RelationWitness };

    Outcome outcome = Outcome::No;
    /// Yes: generator of the attainable-value subgroup dZ (never 1; 0 means
    /// only 0 is attainable).
    mpz_class d = 0;
    Reason reason = Reason::NotCospectral;
    /// RelationWitness: l with sum l_r (lambda_r - lambda_0) = 0 exactly and
    /// sum over X2 of l_r equal to +-1, indexed r = 1..n-1.
    std::vector<mpz_class> witness;
};

/// Exact PGFR decision for the pair (a, b).
PgfrVerdict decide_pgfr(const CayleyGraph& g, std::int64_t a, std::int64_t b);

/// One verdict per order-two group element b, paired with a = identity.
/// Cayley graphs are vertex-transitive, so these cover all pairs.
std::vector<std::pair<std::int64_t, PgfrVerdict>> decide_pgfr_from_identity(const CayleyGraph& g);

/// All index pairs (r, l) with a_r > a_l in lexicographic element order whose
/// scaled weight wt(2 (b-a) (a_r - a_l) / n) is an even integer. Products and
/// differences are taken over plain integer representatives, without modular
/// reduction.
std::vector<std::pair<std::int64_t, std::int64_t>> fr_pair_set(const AbelianGroup& group,
                                                               std::int64_t a, std::int64_t b);

struct FrVerdict {
    enum class Outcome { Yes, No };
    enum class Reason {
        NotOrderTwo,
        OddFactor,
        IncommensurableDifferences,
        /// Every time resonating the within-class differences also collapses
        /// the two phase classes, forcing the b-amplitude to zero.
        CrossClassResonant,
    };

    Outcome outcome = Outcome::No;
    /// Yes: a time with H(t) e_a supported on {a, b} and non-zero b-amplitude.
    double t_witness = 0.0;
    std::string description;
    Reason reason = Reason::NotOrderTwo;
    /// IncommensurableDifferences: the offending index pair.
    std::pair<std::int64_t, std::int64_t> incommensurable_pair{0, 0};
};

/// Exact FR decision for the pair (a, b).
FrVerdict decide_fr(const CayleyGraph& g, std::int64_t a, std::int64_t b);

}  // namespace pgfr
