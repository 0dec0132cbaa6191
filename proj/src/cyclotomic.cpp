#include "pgfr/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pgfr {

void IntPolynomial::normalize() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

namespace {

// Exact division of num by the monic polynomial den; throws if a remainder
// would be left (never happens for the divisor chains used here).
IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
    const int dd = den.degree();
    if (dd < 0 || den.coefficients[dd] != 1)
        throw std::logic_error("divide_exact expects a monic divisor");
    if (num.degree() < dd) throw std::logic_error("divide_exact degree underflow");
    std::vector<mpz_class> q(num.degree() - dd + 1);
    for (int i = num.degree(); i >= dd; --i) {
        mpz_class c = num.coefficients[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num.coefficients[i - dd + j] -= c * den.coefficients[j];
    }
    num.normalize();
    if (!num.is_zero()) throw std::logic_error("divide_exact: non-zero remainder");
    return IntPolynomial{std::move(q)};
}

std::mutex phi_mutex;
std::map<std::int64_t, IntPolynomial> phi_cache;

IntPolynomial cyclotomic_unlocked(std::int64_t n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    // x^n - 1
    IntPolynomial f;
    f.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);
    f.coefficients[0] = -1;
    f.coefficients[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) f = divide_exact(std::move(f), cyclotomic_unlocked(d));
    phi_cache.emplace(n, f);
    return f;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be >= 1");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclotomic_unlocked(n);
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
    std::int64_t result = n, m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

CyclotomicInteger::CyclotomicInteger(std::int64_t conductor, std::vector<mpz_class> coords)
    : conductor_(conductor), coords_(std::move(coords)) {
    if (conductor_ < 1) throw std::invalid_argument("conductor must be >= 1");
    if (static_cast<std::int64_t>(coords_.size()) != euler_phi(conductor_))
        throw std::invalid_argument("coordinate vector must have length phi(conductor)");
}

CyclotomicInteger CyclotomicInteger::zero(std::int64_t conductor) {
    return CyclotomicInteger(conductor,
                             std::vector<mpz_class>(static_cast<std::size_t>(euler_phi(conductor)), 0));
}

CyclotomicInteger CyclotomicInteger::from_integer(std::int64_t conductor, const mpz_class& value) {
    auto c = zero(conductor);
    c.coords_[0] = value;
    return c;
}

CyclotomicInteger CyclotomicInteger::from_root_powers(std::int64_t conductor,
                                                      const std::vector<std::int64_t>& exponents) {
    if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
    // Tally omega^e terms, then reduce the tally polynomial modulo Phi_L.
    std::vector<mpz_class> tally(static_cast<std::size_t>(conductor), 0);
    for (std::int64_t e : exponents) {
        std::int64_t r = e % conductor;
        if (r < 0) r += conductor;
        tally[static_cast<std::size_t>(r)] += 1;
    }
    const IntPolynomial phi = cyclotomic_polynomial(conductor);
    const int dm = phi.degree();
    for (int i = static_cast<int>(tally.size()) - 1; i >= dm; --i) {
        mpz_class c = tally[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j)
            tally[static_cast<std::size_t>(i - dm + j)] -= c * phi.coefficients[static_cast<std::size_t>(j)];
    }
    tally.resize(static_cast<std::size_t>(dm));
    return CyclotomicInteger(conductor, std::move(tally));
}

namespace {
void require_same_conductor(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("cyclotomic conductor mismatch");
}
}  // namespace

CyclotomicInteger add(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_conductor(a, b);
    std::vector<mpz_class> c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return CyclotomicInteger(a.conductor(), std::move(c));
}

CyclotomicInteger sub(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_conductor(a, b);
    std::vector<mpz_class> c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
    return CyclotomicInteger(a.conductor(), std::move(c));
}

CyclotomicInteger scale(const CyclotomicInteger& a, const mpz_class& m) {
    std::vector<mpz_class> c = a.coords();
    for (auto& x : c) x *= m;
    return CyclotomicInteger(a.conductor(), std::move(c));
}

bool is_zero(const CyclotomicInteger& a) {
    for (const auto& x : a.coords())
        if (x != 0) return false;
    return true;
}

std::optional<mpz_class> as_integer(const CyclotomicInteger& a) {
    for (std::size_t i = 1; i < a.coords().size(); ++i)
        if (a.coords()[i] != 0) return std::nullopt;
    return a.coords()[0];
}

bool are_parallel(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_conductor(a, b);
    if (is_zero(a) || is_zero(b)) return true;
    std::size_t pivot = 0;
    while (a.coords()[pivot] == 0) ++pivot;
    if (b.coords()[pivot] == 0) return false;
    for (std::size_t j = 0; j < a.coords().size(); ++j)
        if (a.coords()[pivot] * b.coords()[j] != b.coords()[pivot] * a.coords()[j]) return false;
    return true;
}

std::optional<mpq_class> exact_ratio(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_conductor(a, b);
    if (is_zero(b)) return std::nullopt;
    if (!are_parallel(a, b)) return std::nullopt;
    if (is_zero(a)) return mpq_class(0);
    std::size_t pivot = 0;
    while (b.coords()[pivot] == 0) ++pivot;
    mpq_class r(a.coords()[pivot], b.coords()[pivot]);
    r.canonicalize();
    return r;
}

std::complex<double> evaluate_float(const CyclotomicInteger& a) {
    const double step = 2.0 * M_PI / static_cast<double>(a.conductor());
    std::complex<double> v(0.0, 0.0);
    for (std::size_t j = 0; j < a.coords().size(); ++j) {
        if (a.coords()[j] == 0) continue;
        double c = a.coords()[j].get_d();
        v += c * std::complex<double>(std::cos(step * static_cast<double>(j)),
                                      std::sin(step * static_cast<double>(j)));
    }
    return v;
}

}  // namespace pgfr
