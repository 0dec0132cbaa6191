#include "pgfr/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace pgfr {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
    IntegerMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

mpz_class determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m.at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = q;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

// Row-style HNF: returns (r, w) with r = w * a, w unimodular, r in upper row
// echelon form with positive pivots and reduced entries above each pivot.
// Row order of elimination is deterministic.
std::pair<IntegerMatrix, IntegerMatrix> row_hnf(const IntegerMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntegerMatrix r = a;
    IntegerMatrix w = IntegerMatrix::identity(m);
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < n && pivot_row < m; ++c) {
        // clear column c below pivot_row by gcd steps
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = pivot_row; i < m; ++i) {
                if (r.at(i, c) == 0) continue;
                if (best == m || mpz_cmpabs(r.at(i, c).get_mpz_t(), r.at(best, c).get_mpz_t()) < 0) best = i;
            }
            if (best == m) break;  // column already clear
            bool others = false;
            for (std::size_t i = pivot_row; i < m; ++i) {
                if (i == best || r.at(i, c) == 0) continue;
                others = true;
                mpz_class q = r.at(i, c) / r.at(best, c);  // truncated division
                if (q != 0) {
                    for (std::size_t j = 0; j < n; ++j) r.at(i, j) -= q * r.at(best, j);
                    for (std::size_t j = 0; j < m; ++j) w.at(i, j) -= q * w.at(best, j);
                }
            }
            if (!others) {
                if (best != pivot_row) {
                    for (std::size_t j = 0; j < n; ++j) std::swap(r.at(best, j), r.at(pivot_row, j));
                    for (std::size_t j = 0; j < m; ++j) std::swap(w.at(best, j), w.at(pivot_row, j));
                }
                break;
            }
            // truncated quotients can leave same-sign residues; loop shrinks them to gcd
        }
        if (r.at(pivot_row, c) == 0) continue;
        if (r.at(pivot_row, c) < 0) {
            for (std::size_t j = 0; j < n; ++j) r.at(pivot_row, j) = -r.at(pivot_row, j);
            for (std::size_t j = 0; j < m; ++j) w.at(pivot_row, j) = -w.at(pivot_row, j);
        }
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < pivot_row; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), r.at(i, c).get_mpz_t(), r.at(pivot_row, c).get_mpz_t());
            if (q != 0) {
                for (std::size_t j = 0; j < n; ++j) r.at(i, j) -= q * r.at(pivot_row, j);
                for (std::size_t j = 0; j < m; ++j) w.at(i, j) -= q * w.at(pivot_row, j);
            }
        }
        ++pivot_row;
    }
    return {std::move(r), std::move(w)};
}

}  // namespace

HnfResult hnf(const IntegerMatrix& m) {
    auto [r, w] = row_hnf(transpose(m));
    return HnfResult{transpose(r), transpose(w)};
}

LatticeBasis kernel_basis(const IntegerMatrix& m) {
    auto [r, w] = row_hnf(transpose(m));
    LatticeBasis basis;
    basis.dimension = m.cols();
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<mpz_class> v(basis.dimension);
        for (std::size_t j = 0; j < basis.dimension; ++j) v[j] = w.at(i, j);
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

namespace {

// quotient of a by b rounded to the nearest integer (remainder <= |b|/2)
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // floor division leaves r with the sign of b; stepping q up by one always
    // moves the remainder to the other side of zero
    mpz_class r2 = 2 * r;
    if (mpz_cmpabs(r2.get_mpz_t(), b.get_mpz_t()) > 0) q += 1;
    return q;
}

}  // namespace

SnfResult snf(const IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntegerMatrix d = m;
    IntegerMatrix u = IntegerMatrix::identity(rows);
    IntegerMatrix v = IntegerMatrix::identity(cols);

    auto row_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < cols; ++j) d.at(dst, j) -= q * d.at(src, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < rows; ++i) d.at(i, dst) -= q * d.at(i, src);
        for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) -= q * v.at(i, src);
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(d.at(x, j), d.at(y, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(x, j), u.at(y, j));
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(d.at(i, x), d.at(i, y));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, x), v.at(i, y));
    };

    const std::size_t steps = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // move a minimal non-zero entry of the trailing block to (t, t);
            // re-selecting it every pass keeps the intermediate entries small
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi == rows ||
                        mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) break;  // trailing block is zero
            row_swap(t, pi);
            col_swap(t, pj);

            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                row_op(i, t, nearest_quotient(d.at(i, t), d.at(t, t)));
                if (d.at(i, t) != 0) changed = true;  // remainder smaller than the pivot
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                col_op(j, t, nearest_quotient(d.at(t, j), d.at(t, t)));
                if (d.at(t, j) != 0) changed = true;
            }
            if (changed) continue;

            // divisibility fix-up: fold a row holding a non-divisible entry
            // into row t, then rerun the elimination with a smaller pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_op(t, i, mpz_class(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t < rows && t < cols && d.at(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) d.at(t, j) = -d.at(t, j);
            for (std::size_t j = 0; j < rows; ++j) u.at(t, j) = -u.at(t, j);
        }
    }
    return SnfResult{std::move(d), std::move(u), std::move(v)};
}

mpz_class functional_image_gcd(const LatticeBasis& basis, const std::vector<mpz_class>& f) {
    if (f.size() != basis.dimension) throw std::invalid_argument("functional dimension mismatch");
    mpz_class d = 0;
    for (const auto& b : basis.vectors) {
        mpz_class val = 0;
        for (std::size_t j = 0; j < f.size(); ++j) val += f[j] * b[j];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), val.get_mpz_t());
        d = g;
    }
    return d;
}

}  // namespace pgfr
