#include "pgfr/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pgfr {

namespace {

constexpr double kGammaBetaEps = 1e-12;

// Shared per-pair scan context: spectrum values and chi_r(b-a) phases.
struct PairContext {
    std::vector<double> lambda;
    std::vector<std::complex<double>> chi;  // chi_r(b - a)
    std::size_t n;
};

PairContext make_pair_context(const CayleyGraph& g, std::int64_t a, std::int64_t b) {
    if (a == b) throw std::invalid_argument("the two vertices must be distinct");
    const AbelianGroup& grp = g.group();
    grp.validate(grp.element_at(a));
    GroupElement diff = grp.sub(grp.element_at(b), grp.element_at(a));
    PairContext ctx;
    ctx.n = static_cast<std::size_t>(grp.order());
    ctx.lambda = g.spectrum().floating;
    ctx.chi.resize(ctx.n);
    const double step = 2.0 * M_PI / static_cast<double>(grp.exponent());
    for (std::int64_t r = 0; r < grp.order(); ++r) {
        const double ang = step * static_cast<double>(grp.character_exponent(r, diff));
        ctx.chi[static_cast<std::size_t>(r)] = {std::cos(ang), std::sin(ang)};
    }
    return ctx;
}

PairProfile evaluate_pair(const PairContext& ctx, double t) {
    std::complex<double> alpha(0.0, 0.0), beta(0.0, 0.0);
    for (std::size_t r = 0; r < ctx.n; ++r) {
        const std::complex<double> ph(std::cos(-t * ctx.lambda[r]), std::sin(-t * ctx.lambda[r]));
        alpha += ph;
        beta += ph * ctx.chi[r];
    }
    const double inv_n = 1.0 / static_cast<double>(ctx.n);
    alpha *= inv_n;
    beta *= inv_n;
    PairProfile p;
    p.t = t;
    p.alpha = alpha;
    p.beta = beta;
    p.leakage = 1.0 - std::norm(alpha) - std::norm(beta);
    if (std::abs(beta) > kGammaBetaEps) p.gamma = -std::conj(alpha) * beta / std::conj(beta);
    return p;
}

std::vector<std::complex<double>> amplitudes_impl(const CayleyGraph& g, std::int64_t a, double t,
                                                  bool parallel) {
    const AbelianGroup& grp = g.group();
    grp.validate(grp.element_at(a));
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
    const std::int64_t n = grp.order();
    const std::int64_t L = grp.exponent();
    const std::vector<double>& lambda = g.spectrum().floating;

    // phase table for the L-th roots of unity and per-r walk phases
    std::vector<std::complex<double>> root(static_cast<std::size_t>(L));
    for (std::int64_t e = 0; e < L; ++e) {
        const double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(L);
        root[static_cast<std::size_t>(e)] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::complex<double>> walk(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r)
        walk[static_cast<std::size_t>(r)] = {std::cos(-t * lambda[static_cast<std::size_t>(r)]),
                                             std::sin(-t * lambda[static_cast<std::size_t>(r)])};

    GroupElement ea = grp.element_at(a);
    std::vector<std::complex<double>> amp(static_cast<std::size_t>(n));
    const double inv_n = 1.0 / static_cast<double>(n);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t c = 0; c < n; ++c) {
        GroupElement w = grp.sub(grp.element_at(c), ea);
        std::complex<double> sum(0.0, 0.0);
        for (std::int64_t r = 0; r < n; ++r)
            sum += walk[static_cast<std::size_t>(r)] *
                   root[static_cast<std::size_t>(grp.character_exponent(r, w))];
        amp[static_cast<std::size_t>(c)] = sum * inv_n;
    }
    return amp;
}

struct Candidate {
    double leakage;
    double t;
    bool operator<(const Candidate& o) const {
        return leakage != o.leakage ? leakage < o.leakage : t < o.t;
    }
};

// Golden-section minimization of fn over [lo, hi].
template <typename Fn>
double golden_minimize(Fn&& fn, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = fn(x1), f2 = fn(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = fn(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = fn(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

void validate_config(const SearchConfig& cfg) {
    if (cfg.t_max <= 0 || cfg.grid_points <= 0 || cfg.refine_top <= 0 || cfg.refine_iters <= 0 ||
        cfg.beta_floor <= 0)
        throw std::invalid_argument("search configuration values must be positive");
}

std::vector<PairProfile> search_impl(const CayleyGraph& g, std::int64_t a, std::int64_t b,
                                     const SearchConfig& cfg, bool parallel) {
    validate_config(cfg);
    const PairContext ctx = make_pair_context(g, a, b);
    const double step = cfg.t_max / static_cast<double>(cfg.grid_points);
    const std::size_t keep = static_cast<std::size_t>(cfg.refine_top);

    // Per-chunk top lists merge into a global top list; every grid point is
    // evaluated identically, so the result does not depend on the chunking.
    std::vector<Candidate> merged;
#pragma omp parallel if (parallel)
    {
        std::vector<Candidate> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 1; i <= cfg.grid_points; ++i) {
            const double t = step * static_cast<double>(i);
            PairProfile p = evaluate_pair(ctx, t);
            if (std::abs(p.beta) < cfg.beta_floor) continue;
            local.push_back({p.leakage, t});
            if (local.size() > 4 * keep) {
                std::sort(local.begin(), local.end());
                local.resize(keep);
            }
        }
        std::sort(local.begin(), local.end());
        if (local.size() > keep) local.resize(keep);
#pragma omp critical
        merged.insert(merged.end(), local.begin(), local.end());
    }
    std::sort(merged.begin(), merged.end());
    if (merged.size() > keep) merged.resize(keep);

    std::vector<PairProfile> out;
    out.reserve(merged.size());
    for (const Candidate& c : merged) {
        const double lo = std::max(c.t - step, step * 1e-3);
        const double hi = std::min(c.t + step, cfg.t_max);
        const double t_best = golden_minimize(
            [&](double t) { return evaluate_pair(ctx, t).leakage; }, lo, hi, cfg.refine_iters);
        PairProfile refined = evaluate_pair(ctx, t_best);
        PairProfile coarse = evaluate_pair(ctx, c.t);
        PairProfile best = refined.leakage <= coarse.leakage ? refined : coarse;
        if (std::abs(best.beta) < cfg.beta_floor) continue;
        out.push_back(best);
    }
    std::sort(out.begin(), out.end(), [](const PairProfile& x, const PairProfile& y) {
        return x.leakage != y.leakage ? x.leakage < y.leakage : x.t < y.t;
    });
    return out;
}

}  // namespace

std::vector<std::complex<double>> amplitudes(const CayleyGraph& g, std::int64_t a, double t) {
    return amplitudes_impl(g, a, t, true);
}

std::vector<std::complex<double>> amplitudes_serial(const CayleyGraph& g, std::int64_t a,
                                                    double t) {
    return amplitudes_impl(g, a, t, false);
}

PairProfile pair_profile(const CayleyGraph& g, std::int64_t a, std::int64_t b, double t) {
    return evaluate_pair(make_pair_context(g, a, b), t);
}

std::vector<PairProfile> search_times(const CayleyGraph& g, std::int64_t a, std::int64_t b,
                                      const SearchConfig& cfg) {
    return search_impl(g, a, b, cfg, true);
}

std::vector<PairProfile> search_times_serial(const CayleyGraph& g, std::int64_t a, std::int64_t b,
                                             const SearchConfig& cfg) {
    return search_impl(g, a, b, cfg, false);
}

std::vector<std::complex<double>> matrix_exponential_oracle(const CayleyGraph& g, std::int64_t a,
                                                            double t) {
    const std::int64_t n = g.order();
    if (n > 512) throw std::invalid_argument("matrix exponential oracle is limited to n <= 512");
    const auto adj = g.adjacency_matrix(512);
    const std::size_t un = static_cast<std::size_t>(n);

    using Cd = std::complex<double>;
    // B = -i t A / 2^s with ||B||_inf <= 1
    const double norm = static_cast<double>(g.degree()) * std::abs(t);
    int s = 0;
    while (norm > std::ldexp(1.0, s)) ++s;
    const Cd scale = Cd(0.0, -t / std::ldexp(1.0, s));

    std::vector<Cd> b(un * un);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j)
            if (adj[i][j]) b[i * un + j] = scale;

    auto matmul = [un](const std::vector<Cd>& x, const std::vector<Cd>& y) {
        std::vector<Cd> z(un * un);
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t k = 0; k < un; ++k) {
                const Cd v = x[i * un + k];
                if (v == Cd(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < un; ++j) z[i * un + j] += v * y[k * un + j];
            }
        return z;
    };

    // exp(B) by plain Taylor series; ||B|| <= 1 so 30 terms are plenty
    std::vector<Cd> result(un * un), term(un * un);
    for (std::size_t i = 0; i < un; ++i) result[i * un + i] = term[i * un + i] = 1.0;
    for (int k = 1; k <= 30; ++k) {
        term = matmul(term, b);
        for (auto& v : term) v /= static_cast<double>(k);
        double tmax = 0.0;
        for (const auto& v : term) tmax = std::max(tmax, std::abs(v));
        for (std::size_t i = 0; i < result.size(); ++i) result[i] += term[i];
        if (tmax < 1e-19) break;
    }
    for (int i = 0; i < s; ++i) result = matmul(result, result);

    std::vector<Cd> amp(un);
    const std::size_t ua = static_cast<std::size_t>(a);
    for (std::size_t c = 0; c < un; ++c) amp[c] = result[c * un + ua];
    return amp;
}

PgstQuality pgst_quality(const CayleyGraph& g, std::int64_t a, std::int64_t b,
                         const SearchConfig& cfg) {
    validate_config(cfg);
    const PairContext ctx = make_pair_context(g, a, b);
    const double step = cfg.t_max / static_cast<double>(cfg.grid_points);
    const std::size_t keep = static_cast<std::size_t>(cfg.refine_top);

    struct Peak {
        double score;  // -|beta|^2
        double t;
        bool operator<(const Peak& o) const {
            return score != o.score ? score < o.score : t < o.t;
        }
    };
    std::vector<Peak> merged;
#pragma omp parallel
    {
        std::vector<Peak> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 1; i <= cfg.grid_points; ++i) {
            const double t = step * static_cast<double>(i);
            PairProfile p = evaluate_pair(ctx, t);
            local.push_back({-std::norm(p.beta), t});
            if (local.size() > 4 * keep) {
                std::sort(local.begin(), local.end());
                local.resize(keep);
            }
        }
        std::sort(local.begin(), local.end());
        if (local.size() > keep) local.resize(keep);
#pragma omp critical
        merged.insert(merged.end(), local.begin(), local.end());
    }
    std::sort(merged.begin(), merged.end());
    if (merged.size() > keep) merged.resize(keep);

    PgstQuality best;
    for (const Peak& c : merged) {
        const double lo = std::max(c.t - step, step * 1e-3);
        const double hi = std::min(c.t + step, cfg.t_max);
        const double t_best = golden_minimize(
            [&](double t) { return -std::norm(evaluate_pair(ctx, t).beta); }, lo, hi,
            cfg.refine_iters);
        for (double t : {t_best, c.t}) {
            const double q = std::norm(evaluate_pair(ctx, t).beta);
            if (q > best.quality) {
                best.quality = q;
                best.t = t;
            }
        }
    }
    best.quality = std::min(best.quality, 1.0);
    return best;
}

void write_scan_csv(std::ostream& os, const std::vector<PairProfile>& profiles) {
    os << "t,alpha_re,alpha_im,beta_re,beta_im,leakage\n";
    char buf[160];
    for (const PairProfile& p : profiles) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p.t,
                      p.alpha.real(), p.alpha.imag(), p.beta.real(), p.beta.imag(), p.leakage);
        os << buf;
    }
}

}  // namespace pgfr
