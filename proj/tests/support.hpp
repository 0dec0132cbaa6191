#pragma once

// Shared test helpers: independent oracles (box enumeration over the relation
// lattice, rational-elimination kernels, alternating eigenvalue sums) and
// small utilities. Everything here stays independent of the implementation
// paths it is used to check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pgfr/cyclotomic.hpp"
#include "pgfr/graphs.hpp"
#include "pgfr/lattice.hpp"

namespace testsupport {

// ---------------------------------------------------------------------------
// Alternating eigenvalue sum: (l2 - l1) + sum_j (l_{mj+2} - l_{mj+1})
//                             - sum_j (l_{mj-1} - l_{mj-2}),  j = 1..(p-1)/2.
// Exact, over the graph's cyclotomic eigenvalues.
inline pgfr::CyclotomicInteger alternating_eigenvalue_sum(const pgfr::Spectrum& spec,
                                                          std::int64_t p, std::int64_t m) {
    const auto& lam = spec.exact;
    auto at = [&](std::int64_t i) -> const pgfr::CyclotomicInteger& {
        return lam[static_cast<std::size_t>(i)];
    };
    pgfr::CyclotomicInteger acc = pgfr::sub(at(2), at(1));
    for (std::int64_t j = 1; j <= (p - 1) / 2; ++j) {
        acc = pgfr::add(acc, pgfr::sub(at(m * j + 2), at(m * j + 1)));
        acc = pgfr::sub(acc, pgfr::sub(at(m * j - 1), at(m * j - 2)));
    }
    return acc;
}

// sum_{j=0}^{p1-1} (-1)^j cos((d + j*k) * p2 * pi / m), m = p1 * k.
inline double alternating_cosine_sum(std::int64_t p1, std::int64_t p2, std::int64_t k,
                                     std::int64_t d) {
    const double m = static_cast<double>(p1 * k);
    double sum = 0.0;
    for (std::int64_t j = 0; j < p1; ++j) {
        const double angle = static_cast<double>((d + j * k) * p2) * M_PI / m;
        sum += (j % 2 == 0 ? 1.0 : -1.0) * std::cos(angle);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Box enumeration oracle over the exact relation lattice
//   { l in [-box, box]^(n-1) : sum_r l_r (lambda_r - lambda_0) = 0 }.
// Visits every solution and reports the gcd of the functional values f . l
// plus whether |f . l| == target was attained. Branch-and-bound on the
// partial row sums keeps this tractable for n <= 10.
struct BoxScanResult {
    std::int64_t value_gcd = 0;  // gcd of all observed f.l (0 if only 0 seen)
    bool attained = false;       // some |f.l| == target
    std::uint64_t solutions = 0;
};

inline BoxScanResult box_relation_scan(const pgfr::CayleyGraph& g,
                                       const std::vector<std::int64_t>& f, std::int64_t box,
                                       std::int64_t target) {
    const std::int64_t n = g.order();
    const auto& spec = g.spectrum().exact;
    const std::size_t dim = spec[0].coords().size();
    const std::size_t cols = static_cast<std::size_t>(n - 1);

    // columns of the difference matrix as int64 (eigenvalue coordinates are
    // bounded by the degree, far below any overflow risk)
    std::vector<std::vector<std::int64_t>> col(cols, std::vector<std::int64_t>(dim));
    for (std::size_t r = 0; r < cols; ++r) {
        pgfr::CyclotomicInteger d = pgfr::sub(spec[r + 1], spec[0]);
        for (std::size_t i = 0; i < dim; ++i) col[r][i] = d.coords()[i].get_si();
    }
    // bound[j][i] = box * sum_{r >= j} |col[r][i]|
    std::vector<std::vector<std::int64_t>> bound(cols + 1, std::vector<std::int64_t>(dim, 0));
    for (std::size_t j = cols; j-- > 0;)
        for (std::size_t i = 0; i < dim; ++i)
            bound[j][i] = bound[j + 1][i] + box * std::abs(col[j][i]);

    BoxScanResult result;
    std::vector<std::int64_t> partial(dim, 0);
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t j, std::int64_t fval) {
        for (std::size_t i = 0; i < dim; ++i)
            if (std::abs(partial[i]) > bound[j][i]) return;  // cannot reach zero any more
        if (j == cols) {
            bool zero = true;
            for (std::size_t i = 0; i < dim; ++i) zero = zero && partial[i] == 0;
            if (!zero) return;
            ++result.solutions;
            std::int64_t a = std::abs(fval);
            if (a != 0) {
                std::int64_t gg = result.value_gcd;
                while (a != 0) {
                    std::int64_t t = gg % a;
                    gg = a;
                    a = t;
                }
                result.value_gcd = std::abs(gg);
            }
            if (std::abs(fval) == target) result.attained = true;
            return;
        }
        for (std::int64_t v = -box; v <= box; ++v) {
            for (std::size_t i = 0; i < dim; ++i) partial[i] += v * col[j][i];
            walk(j + 1, fval + v * f[j]);
            for (std::size_t i = 0; i < dim; ++i) partial[i] -= v * col[j][i];
        }
    };
    walk(0, 0);
    return result;
}

// X2 indicator on indices 1..n-1 for the pair (0, b), as int64.
inline std::vector<std::int64_t> x2_indicator(const pgfr::CayleyGraph& g, std::int64_t b) {
    const pgfr::AbelianGroup& grp = g.group();
    pgfr::GroupElement diff = grp.element_at(b);
    const std::int64_t half = grp.exponent() / 2;
    std::vector<std::int64_t> f(static_cast<std::size_t>(grp.order() - 1), 0);
    for (std::int64_t r = 1; r < grp.order(); ++r)
        if (grp.character_exponent(r, diff) == half) f[static_cast<std::size_t>(r - 1)] = 1;
    return f;
}

// ---------------------------------------------------------------------------
// Rational kernel via mpq Gaussian elimination: an implementation-independent
// route to kernel vectors for saturation checks.
inline std::vector<std::vector<mpq_class>> rational_kernel(const pgfr::IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mpq_class(m.at(i, j));

    std::vector<std::int64_t> pivot_col_of_row;
    std::size_t prow = 0;
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = prow;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[prow]);
        const mpq_class inv = a[prow][c];
        for (std::size_t j = 0; j < cols; ++j) a[prow][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == prow || a[i][c] == 0) continue;
            const mpq_class factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[prow][j];
        }
        pivot_col_of_row.push_back(static_cast<std::int64_t>(c));
        is_pivot[c] = 1;
        ++prow;
    }
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<mpq_class> v(cols, mpq_class(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[static_cast<std::size_t>(pivot_col_of_row[i])] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scale a rational vector by the lcm of denominators.
inline std::vector<mpz_class> clear_denominators(const std::vector<mpq_class>& v) {
    mpz_class lcm = 1;
    for (const auto& x : v) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        lcm = l;
    }
    std::vector<mpz_class> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpq_class scaled = v[i] * mpq_class(lcm);
        scaled.canonicalize();
        out[i] = scaled.get_num();
    }
    return out;
}

// Integer membership of v in the lattice spanned by basis: solve B x = v over
// Z through the column HNF of B.
inline bool lattice_contains(const pgfr::LatticeBasis& basis, const std::vector<mpz_class>& v) {
    if (basis.vectors.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    const std::size_t dim = basis.dimension, k = basis.vectors.size();
    pgfr::IntegerMatrix b(dim, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i) b.at(i, j) = basis.vectors[j][i];
    pgfr::HnfResult h = pgfr::hnf(b);
    // forward-solve H x = v using the echelon pivot structure
    std::vector<mpz_class> residual = v;
    std::vector<std::size_t> pivot_row(k, dim);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            if (h.h.at(i, j) != 0) {
                pivot_row[j] = i;
                break;
            }
    for (std::size_t j = 0; j < k; ++j) {
        if (pivot_row[j] == dim) continue;  // zero column
        const std::size_t pr = pivot_row[j];
        if (residual[pr] % h.h.at(pr, j) != 0) return false;
        mpz_class q = residual[pr] / h.h.at(pr, j);
        if (q != 0)
            for (std::size_t i = 0; i < dim; ++i) residual[i] -= q * h.h.at(i, j);
    }
    for (const auto& x : residual)
        if (x != 0) return false;
    return true;
}

// Deterministic RNG for property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline pgfr::IntegerMatrix random_matrix(std::mt19937_64& gen, std::size_t max_dim,
                                         std::int64_t max_entry) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<std::int64_t> entry(-max_entry, max_entry);
    pgfr::IntegerMatrix m(dim(gen), dim(gen));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(gen);
    return m;
}

}  // namespace testsupport
