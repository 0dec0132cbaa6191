#include "pgfr/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace pgfr {

CayleyGraph make_cayley(AbelianGroup group, std::vector<GroupElement> connection) {
    std::set<std::int64_t> seen;
    for (const auto& y : connection) {
        group.validate(y);
        const std::int64_t idx = group.index_of(y);
        if (idx == 0) throw std::invalid_argument("connection set must not contain the identity");
        if (!seen.insert(idx).second)
            throw std::invalid_argument("connection set contains a duplicate element");
    }
    for (const auto& y : connection)
        if (!seen.count(group.index_of(group.neg(y))))
            throw std::invalid_argument("connection set is not symmetric under negation");

    // canonical order: sort by element index
    std::sort(connection.begin(), connection.end(),
              [&](const GroupElement& a, const GroupElement& b) {
                  return group.index_of(a) < group.index_of(b);
              });

    // connectivity = the connection set generates the group
    std::vector<char> reached(static_cast<std::size_t>(group.order()), 0);
    reached[0] = 1;
    std::vector<std::int64_t> frontier{0};
    std::size_t count = 1;
    while (!frontier.empty()) {
        std::int64_t v = frontier.back();
        frontier.pop_back();
        GroupElement ev = group.element_at(v);
        for (const auto& y : connection) {
            std::int64_t w = group.index_of(group.add(ev, y));
            if (!reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = 1;
                ++count;
                frontier.push_back(w);
            }
        }
    }
    const bool connected = count == static_cast<std::size_t>(group.order());
    return CayleyGraph(std::move(group), std::move(connection), connected);
}

CayleyGraph complement(const CayleyGraph& g) {
    std::set<std::int64_t> in_s;
    for (const auto& y : g.connection()) in_s.insert(g.group().index_of(y));
    std::vector<GroupElement> comp;
    for (std::int64_t idx = 1; idx < g.order(); ++idx)
        if (!in_s.count(idx)) comp.push_back(g.group().element_at(idx));
    return make_cayley(g.group(), std::move(comp));
}

const Spectrum& CayleyGraph::spectrum() const {
    std::call_once(cache_->once, [this] {
        const std::int64_t n = group_.order();
        const std::int64_t L = group_.exponent();
        Spectrum s;
        s.exact.reserve(static_cast<std::size_t>(n));
        s.floating.reserve(static_cast<std::size_t>(n));
        std::vector<std::int64_t> exps(connection_.size());
        for (std::int64_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k < connection_.size(); ++k)
                exps[k] = group_.character_exponent(r, connection_[k]);
            s.exact.push_back(CyclotomicInteger::from_root_powers(L, exps));
            double lam = 0.0;
            for (std::int64_t e : exps)
                lam += std::cos(2.0 * M_PI * static_cast<double>(e) / static_cast<double>(L));
            s.floating.push_back(lam);  // sine parts cancel: S is symmetric
        }
        cache_->value = std::move(s);
    });
    return cache_->value;
}

bool CayleyGraph::is_integral() const {
    for (const auto& lam : spectrum().exact)
        if (!as_integer(lam)) return false;
    return true;
}

std::vector<std::vector<int>> CayleyGraph::adjacency_matrix(std::int64_t max_order) const {
    const std::int64_t n = group_.order();
    if (n > max_order) throw std::invalid_argument("graph too large for a dense adjacency matrix");
    std::set<std::int64_t> in_s;
    for (const auto& y : connection_) in_s.insert(group_.index_of(y));
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::int64_t x = 0; x < n; ++x) {
        GroupElement ex = group_.element_at(x);
        for (std::int64_t y = 0; y < n; ++y) {
            if (x == y) continue;
            GroupElement diff = group_.sub(group_.element_at(y), ex);
            if (in_s.count(group_.index_of(diff)))
                a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
        }
    }
    return a;
}

}  // namespace pgfr
