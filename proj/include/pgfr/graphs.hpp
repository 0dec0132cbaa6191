#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "pgfr/cyclotomic.hpp"
#include "pgfr/groups.hpp"

namespace pgfr {

/// Exact and floating-point spectrum of a Cayley graph, indexed by the
/// character index r in 0..n-1. exact[r] is lambda_r in Z[omega_L];
/// floating[r] is its real-double value.
struct Spectrum {
    std::vector<CyclotomicInteger> exact;
    std::vector<double> floating;
};

/// Cayley graph over a finite abelian group with a symmetric, identity-free
/// connection set. Vertices are identified with group element indices.
/// Immutable; the spectrum is computed once on first use and shared between
/// copies of the same graph value.
class CayleyGraph {
public:
    const AbelianGroup& group() const { return group_; }
    const std::vector<GroupElement>& connection() const { return connection_; }
    std::int64_t order() const { return group_.order(); }
    std::size_t degree() const { return connection_.size(); }
    /// Whether the connection set generates the group (informational).
    bool connected() const { return connected_; }

    const Spectrum& spectrum() const;
    bool is_integral() const;

    /// Dense 0/1 adjacency matrix; throws when the order exceeds max_order.
    std::vector<std::vector<int>> adjacency_matrix(std::int64_t max_order = 4096) const;

private:
    friend CayleyGraph make_cayley(AbelianGroup group, std::vector<GroupElement> connection);

    AbelianGroup group_;
    std::vector<GroupElement> connection_;
    bool connected_ = false;

    struct SpectrumCache {
        std::once_flag once;
        Spectrum value;
    };
    std::shared_ptr<SpectrumCache> cache_;

    CayleyGraph(AbelianGroup group, std::vector<GroupElement> connection, bool connected)
        : group_(std::move(group)),
          connection_(std::move(connection)),
          connected_(connected),
          cache_(std::make_shared<SpectrumCache>()) {}
};

/// Validates the connection set (no identity, closed under negation, distinct
/// elements) and returns the graph. Throws std::invalid_argument on violation.
CayleyGraph make_cayley(AbelianGroup group, std::vector<GroupElement> connection);

/// Cayley graph on the same group whose connection set is the complement
/// within the group minus the identity.
CayleyGraph complement(const CayleyGraph& g);

}  // namespace pgfr
