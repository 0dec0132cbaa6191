#include "pgfr/groups.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace pgfr {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    for (std::int64_t o : orders_) {
        if (o < 2) throw std::invalid_argument("cyclic factor order must be >= 2, got " + std::to_string(o));
        n_ *= o;
        exponent_ = std::lcm(exponent_, o);
    }
}

GroupElement AbelianGroup::identity() const {
    return GroupElement{std::vector<std::int64_t>(orders_.size(), 0)};
}

GroupElement AbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= n_) throw std::out_of_range("element index out of range");
    std::vector<std::int64_t> res(orders_.size());
    for (std::size_t j = orders_.size(); j-- > 0;) {
        res[j] = index % orders_[j];
        index /= orders_[j];
    }
    return GroupElement{std::move(res)};
}

std::int64_t AbelianGroup::index_of(const GroupElement& x) const {
    validate(x);
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) idx = idx * orders_[j] + x.residues[j];
    return idx;
}

void AbelianGroup::validate(const GroupElement& x) const {
    if (x.residues.size() != orders_.size())
        throw std::invalid_argument("group element has wrong number of components");
    for (std::size_t j = 0; j < orders_.size(); ++j)
        if (x.residues[j] < 0 || x.residues[j] >= orders_[j])
            throw std::invalid_argument("group element residue out of range");
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
    validate(x);
    validate(y);
    GroupElement out = x;
    for (std::size_t j = 0; j < orders_.size(); ++j)
        out.residues[j] = (out.residues[j] + y.residues[j]) % orders_[j];
    return out;
}

GroupElement AbelianGroup::sub(const GroupElement& x, const GroupElement& y) const {
    return add(x, neg(y));
}

GroupElement AbelianGroup::neg(const GroupElement& x) const {
    validate(x);
    GroupElement out = x;
    for (std::size_t j = 0; j < orders_.size(); ++j)
        out.residues[j] = (orders_[j] - out.residues[j]) % orders_[j];
    return out;
}

std::int64_t AbelianGroup::order_of(const GroupElement& x) const {
    validate(x);
    // lcm over components of n_j / gcd(n_j, g_j)
    std::int64_t m = 1;
    for (std::size_t j = 0; j < orders_.size(); ++j)
        m = std::lcm(m, orders_[j] / std::gcd(orders_[j], x.residues[j]));
    return m;
}

std::int64_t AbelianGroup::character_exponent(std::int64_t r, const GroupElement& x) const {
    validate(x);
    GroupElement ar = element_at(r);
    std::int64_t e = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        std::int64_t term = (ar.residues[j] * x.residues[j]) % exponent_;
        e = (e + term * (exponent_ / orders_[j])) % exponent_;
    }
    return e;
}

std::int64_t weight(const GroupElement& x) {
    std::int64_t w = 0;
    for (std::int64_t g : x.residues) w += g;
    return w;
}

mpq_class weight_scaled(const std::vector<std::int64_t>& tuple, const AbelianGroup& group) {
    if (tuple.size() != group.rank()) throw std::invalid_argument("tuple length does not match group rank");
    mpq_class w(0);
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        mpq_class term(tuple[j], group.orders()[j]);
        term.canonicalize();
        w += term;
    }
    return w;
}

}  // namespace pgfr
