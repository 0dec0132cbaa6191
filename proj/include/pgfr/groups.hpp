#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace pgfr {

/// Element of a finite abelian group, stored as one residue per cyclic factor.
struct GroupElement {
    std::vector<std::int64_t> residues;

    bool operator==(const GroupElement&) const = default;
};

/// A finite abelian group Z_{n1} + ... + Z_{nk} given by its cyclic factor
/// orders. Elements are enumerated in mixed-radix lexicographic order, the
/// first factor being most significant, so index 0 is the identity.
///
/// Immutable after construction; safe for concurrent reads.
class AbelianGroup {
public:
    /// Throws std::invalid_argument if the list is empty or any order is < 2.
    explicit AbelianGroup(std::vector<std::int64_t> orders);

    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::int64_t order() const { return n_; }      ///< n = product of factor orders
    std::int64_t exponent() const { return exponent_; }  ///< L = lcm of factor orders
    std::size_t rank() const { return orders_.size(); }

    GroupElement identity() const;
    GroupElement element_at(std::int64_t index) const;
    std::int64_t index_of(const GroupElement& x) const;

    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement sub(const GroupElement& x, const GroupElement& y) const;
    GroupElement neg(const GroupElement& x) const;
    /// Least m >= 1 with m*x = identity.
    std::int64_t order_of(const GroupElement& x) const;

    /// Exponent e in [0, L) with chi_r(x) = exp(2*pi*i*e/L). Computed as
    /// sum_j g_{jr} * g_{jx} * (L / n_j) mod L, all in integer arithmetic.
    std::int64_t character_exponent(std::int64_t r, const GroupElement& x) const;

    bool operator==(const AbelianGroup& other) const { return orders_ == other.orders_; }

    /// Throws std::invalid_argument unless x has the right shape with
    /// residues in range.
    void validate(const GroupElement& x) const;

private:
    std::vector<std::int64_t> orders_;
    std::int64_t n_ = 1;
    std::int64_t exponent_ = 1;
};

/// wt(x): plain sum of the residues.
std::int64_t weight(const GroupElement& x);

/// wt(t / n): sum of t_j / n_j as an exact rational, for an UNREDUCED integer
/// tuple t (entries may be negative or exceed n_j).
mpq_class weight_scaled(const std::vector<std::int64_t>& tuple, const AbelianGroup& group);

}  // namespace pgfr
