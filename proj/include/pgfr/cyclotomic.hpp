#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace pgfr {

/// Dense integer polynomial, coefficient index = degree. The leading
/// coefficient is non-zero unless the polynomial is zero (empty vector).
struct IntPolynomial {
    std::vector<mpz_class> coefficients;

    bool is_zero() const { return coefficients.empty(); }
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    /// Drops trailing zero coefficients.
    void normalize();

    bool operator==(const IntPolynomial&) const = default;
};

/// n-th cyclotomic polynomial, exact coefficients. Computed by dividing
/// x^n - 1 by Phi_d for the proper divisors d of n; results are memoized
/// behind a lock, so concurrent callers are fine.
IntPolynomial cyclotomic_polynomial(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Element of Z[omega_L] in the power basis {1, omega, ..., omega^(phi(L)-1)},
/// reduced modulo Phi_L. Coordinates are the unique canonical representative,
/// so value equality is coordinate equality.
class CyclotomicInteger {
public:
    /// coords must have length phi(conductor) and already be reduced.
    CyclotomicInteger(std::int64_t conductor, std::vector<mpz_class> coords);

    static CyclotomicInteger zero(std::int64_t conductor);
    static CyclotomicInteger from_integer(std::int64_t conductor, const mpz_class& value);
    /// Canonical form of sum_e omega_L^(e mod L) over the given exponent multiset.
    static CyclotomicInteger from_root_powers(std::int64_t conductor,
                                              const std::vector<std::int64_t>& exponents);

    std::int64_t conductor() const { return conductor_; }
    const std::vector<mpz_class>& coords() const { return coords_; }

    bool operator==(const CyclotomicInteger&) const = default;

private:
    std::int64_t conductor_;
    std::vector<mpz_class> coords_;
};

/// Ring operations; conductors must match (std::invalid_argument otherwise).
CyclotomicInteger add(const CyclotomicInteger& a, const CyclotomicInteger& b);
CyclotomicInteger sub(const CyclotomicInteger& a, const CyclotomicInteger& b);
CyclotomicInteger scale(const CyclotomicInteger& a, const mpz_class& m);
bool is_zero(const CyclotomicInteger& a);

/// The integer value when all non-constant coordinates vanish, else nullopt.
std::optional<mpz_class> as_integer(const CyclotomicInteger& a);

/// True iff a and b are Q-linearly dependent: one of them is zero, or the
/// coordinate vectors are proportional (decided by cross-multiplication).
bool are_parallel(const CyclotomicInteger& a, const CyclotomicInteger& b);

/// For parallel a, b with b != 0: the exact rational r with a = r * b.
/// nullopt when they are not parallel or b is zero.
std::optional<mpq_class> exact_ratio(const CyclotomicInteger& a, const CyclotomicInteger& b);

/// sum coords[j] * exp(2*pi*i*j/L) in double precision.
std::complex<double> evaluate_float(const CyclotomicInteger& a);

}  // namespace pgfr
