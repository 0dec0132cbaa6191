#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace pgfr {

/// Dense matrix over arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> entries_;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& a);
/// Exact determinant (Bareiss fraction-free elimination); square input only.
mpz_class determinant(const IntegerMatrix& a);

/// Column-style Hermite normal form: h = m * u with u unimodular. Pivots are
/// positive, pivot rows strictly increase with the column index, entries left
/// of a pivot in its row are reduced into [0, pivot), and zero columns are
/// pushed to the right.
struct HnfResult {
    IntegerMatrix h;
    IntegerMatrix u;
};
HnfResult hnf(const IntegerMatrix& m);

/// Smith normal form: u * m * v = d with u, v unimodular and the diagonal
/// entries non-negative, each dividing the next.
struct SnfResult {
    IntegerMatrix d;
    IntegerMatrix u;
    IntegerMatrix v;
};
SnfResult snf(const IntegerMatrix& m);

/// Basis of an integer lattice inside Z^dimension. Vectors are Q-linearly
/// independent and generate the lattice they came from.
struct LatticeBasis {
    std::size_t dimension = 0;
    std::vector<std::vector<mpz_class>> vectors;
};

/// Basis of { x in Z^cols : m * x = 0 }. The returned basis is saturated:
/// every integer kernel vector is an integer combination of it.
LatticeBasis kernel_basis(const IntegerMatrix& m);

/// gcd of f . b over the basis vectors b, i.e. the non-negative generator d
/// of the image subgroup { f . x : x in the lattice } = dZ. Returns 0 for an
/// empty basis or a functional vanishing on all of it.
mpz_class functional_image_gcd(const LatticeBasis& basis, const std::vector<mpz_class>& f);

}  // namespace pgfr
