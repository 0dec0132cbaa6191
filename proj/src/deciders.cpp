#include "pgfr/deciders.hpp"

#include <cmath>
#include <stdexcept>

#include "pgfr/lattice.hpp"

namespace pgfr {

namespace {

GroupElement pair_difference(const CayleyGraph& g, std::int64_t a, std::int64_t b) {
    if (a == b) throw std::invalid_argument("the two vertices must be distinct");
    const AbelianGroup& grp = g.group();
    return grp.sub(grp.element_at(b), grp.element_at(a));
}

}  // namespace

std::optional<CospectralPartition> cospectral_partition(const CayleyGraph& g, std::int64_t a,
                                                        std::int64_t b) {
    const AbelianGroup& grp = g.group();
    GroupElement diff = pair_difference(g, a, b);
    if (grp.order_of(diff) != 2) return std::nullopt;
    const std::int64_t half = grp.exponent() / 2;
    CospectralPartition part;
    for (std::int64_t r = 0; r < grp.order(); ++r) {
        // chi_r(b-a) is +-1 here; it is -1 exactly when the exponent is L/2
        if (grp.character_exponent(r, diff) == half)
            part.x2.push_back(r);
        else
            part.x1.push_back(r);
    }
    return part;
}

PgfrVerdict decide_pgfr(const CayleyGraph& g, std::int64_t a, std::int64_t b) {
    auto part = cospectral_partition(g, a, b);
    PgfrVerdict verdict;
    if (!part) {
        verdict.outcome = PgfrVerdict::Outcome::No;
        verdict.reason = PgfrVerdict::Reason::NotCospectral;
        return verdict;
    }
    const std::int64_t n = g.order();
    const Spectrum& spec = g.spectrum();
    const std::size_t dim = spec.exact[0].coords().size();

    // column r-1 holds coords(lambda_r - lambda_0)
    IntegerMatrix m(dim, static_cast<std::size_t>(n - 1));
    for (std::int64_t r = 1; r < n; ++r) {
        CyclotomicInteger diff = sub(spec.exact[static_cast<std::size_t>(r)], spec.exact[0]);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, static_cast<std::size_t>(r - 1)) = diff.coords()[i];
    }
    LatticeBasis basis = kernel_basis(m);

    std::vector<mpz_class> f(static_cast<std::size_t>(n - 1), 0);
    for (std::int64_t r : part->x2)
        if (r >= 1) f[static_cast<std::size_t>(r - 1)] = 1;  // index 0 is always in x1

    mpz_class d = functional_image_gcd(basis, f);
    if (d != 1) {
        verdict.outcome = PgfrVerdict::Outcome::Yes;
        verdict.d = d;
        return verdict;
    }

    // d == 1: build an explicit l with f.l = +-1 from an extended-gcd
    // combination of the basis functional values.
    verdict.outcome = PgfrVerdict::Outcome::No;
    verdict.reason = PgfrVerdict::Reason::RelationWitness;
    mpz_class cur_g = 0;
    std::vector<mpz_class> cur(static_cast<std::size_t>(n - 1), 0);
    for (const auto& bvec : basis.vectors) {
        mpz_class val = 0;
        for (std::size_t j = 0; j < f.size(); ++j) val += f[j] * bvec[j];
        if (val == 0) continue;
        if (cur_g == 0) {
            const int sign = val < 0 ? -1 : 1;
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = sign * bvec[j];
            cur_g = sign * val;
        } else {
            mpz_class gg, s, t;
            mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cur_g.get_mpz_t(),
                       val.get_mpz_t());
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = s * cur[j] + t * bvec[j];
            cur_g = gg;
        }
        if (cur_g == 1) break;
    }
    verdict.witness = std::move(cur);
    return verdict;
}

std::vector<std::pair<std::int64_t, PgfrVerdict>> decide_pgfr_from_identity(const CayleyGraph& g) {
    std::vector<std::pair<std::int64_t, PgfrVerdict>> out;
    const AbelianGroup& grp = g.group();
    for (std::int64_t b = 1; b < grp.order(); ++b) {
        if (grp.order_of(grp.element_at(b)) != 2) continue;
        out.emplace_back(b, decide_pgfr(g, 0, b));
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> fr_pair_set(const AbelianGroup& group,
                                                               std::int64_t a, std::int64_t b) {
    if (a == b) throw std::invalid_argument("the two vertices must be distinct");
    GroupElement z = group.sub(group.element_at(b), group.element_at(a));
    const std::size_t k = group.rank();
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::vector<std::int64_t> tuple(k);
    // mixed-radix index order coincides with the lexicographic element order,
    // so r > l as indices is exactly a_r > a_l
    for (std::int64_t r = 1; r < group.order(); ++r) {
        GroupElement ar = group.element_at(r);
        for (std::int64_t l = 0; l < r; ++l) {
            GroupElement al = group.element_at(l);
            for (std::size_t j = 0; j < k; ++j)
                tuple[j] = 2 * z.residues[j] * (ar.residues[j] - al.residues[j]);
            mpq_class w = weight_scaled(tuple, group);
            if (w.get_den() == 1 && mpz_even_p(w.get_num().get_mpz_t())) pairs.emplace_back(r, l);
        }
    }
    return pairs;
}

FrVerdict decide_fr(const CayleyGraph& g, std::int64_t a, std::int64_t b) {
    const AbelianGroup& grp = g.group();
    GroupElement z = pair_difference(g, a, b);
    FrVerdict verdict;
    if (grp.order_of(z) != 2) {
        verdict.reason = FrVerdict::Reason::NotOrderTwo;
        return verdict;
    }
    for (std::size_t j = 0; j < grp.rank(); ++j)
        if (z.residues[j] != 0 && grp.orders()[j] % 2 != 0) {
            verdict.reason = FrVerdict::Reason::OddFactor;
            return verdict;
        }

    const Spectrum& spec = g.spectrum();
    const std::int64_t L = grp.exponent();
    auto pairs = fr_pair_set(grp, a, b);

    // Collect the non-zero eigenvalue differences over the pair set. All of
    // them must be rational multiples of the first one.
    std::optional<CyclotomicInteger> delta0;
    mpz_class q_lcm = 1;
    std::vector<mpq_class> ratios;
    for (const auto& [r, l] : pairs) {
        CyclotomicInteger delta =
            sub(spec.exact[static_cast<std::size_t>(r)], spec.exact[static_cast<std::size_t>(l)]);
        if (is_zero(delta)) continue;
        if (!delta0) {
            delta0 = delta;
            q_lcm = 1;
            continue;
        }
        auto ratio = exact_ratio(delta, *delta0);
        if (!ratio) {
            verdict.reason = FrVerdict::Reason::IncommensurableDifferences;
            verdict.incommensurable_pair = {r, l};
            return verdict;
        }
        mpz_class lcm;
        mpz_lcm(lcm.get_mpz_t(), q_lcm.get_mpz_t(), ratio->get_den().get_mpz_t());
        q_lcm = lcm;
    }

    // Cross-class difference: with e^{-it lambda_r} constant on each class at
    // a resonant t, the two class phases differ by t * delta_x (mod 2 pi) for
    // any representative pair. FR needs that offset to be non-zero at some
    // resonant t.
    const std::int64_t half = L / 2;
    std::int64_t first_x2 = -1;
    for (std::int64_t r = 0; r < grp.order(); ++r)
        if (grp.character_exponent(r, z) == half) {
            first_x2 = r;
            break;
        }
    CyclotomicInteger delta_x = sub(spec.exact[0], spec.exact[static_cast<std::size_t>(first_x2)]);

    if (!delta0) {
        // every within-class difference vanishes; any t resonates
        if (is_zero(delta_x)) {
            verdict.reason = FrVerdict::Reason::CrossClassResonant;
            return verdict;
        }
        const double dxf = evaluate_float(delta_x).real();
        verdict.outcome = FrVerdict::Outcome::Yes;
        verdict.t_witness = M_PI / std::abs(dxf);
        verdict.description = "class phases constant at every t; half-turn offset at t = pi/|delta_x|";
        return verdict;
    }

    // minimal resonant time: t0 = 2 pi Q / |delta0|, Q = lcm of ratio denominators
    const double d0f = evaluate_float(*delta0).real();
    const double t0 = 2.0 * M_PI * q_lcm.get_d() / std::abs(d0f);

    // At t0 the cross offset is 2 pi Q delta_x / |delta0|; it vanishes for
    // every resonant t exactly when delta_x is an integer multiple of the
    // within-class lattice generator.
    if (auto rx = exact_ratio(delta_x, *delta0)) {
        mpq_class scaled = *rx * mpq_class(q_lcm);
        scaled.canonicalize();
        if (scaled.get_den() == 1) {
            verdict.reason = FrVerdict::Reason::CrossClassResonant;
            return verdict;
        }
    }
    verdict.outcome = FrVerdict::Outcome::Yes;
    verdict.t_witness = t0;
    verdict.description =
        "within-class differences are rational multiples of delta0; t = 2*pi*Q/|delta0| with Q = " +
        q_lcm.get_str();
    return verdict;
}

}  // namespace pgfr
