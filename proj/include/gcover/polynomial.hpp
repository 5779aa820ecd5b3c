#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gcover {

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
/// The zero polynomial has no coefficients; trailing zeros are never stored.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> ascending);

    /// x - root
    static IntPolynomial linear(const mpz_class& root);
    static IntPolynomial constant(const mpz_class& c);

    /// Degree, or -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    mpz_class coefficient(int i) const;
    const mpz_class& leading() const { return coeffs_.back(); }

    mpz_class evaluate(const mpz_class& x) const;
    double evaluate(double x) const;

    IntPolynomial derivative() const;
    /// p(-x)
    IntPolynomial reflected() const;
    IntPolynomial pow(unsigned e) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Human-readable form, e.g. "x^3 - 3*x - 2".
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

struct DivisionResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Division by a monic polynomial, exact over the integers.
DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& monic_divisor);

/// Monic gcd over Q (scaled back to a primitive integer polynomial with
/// positive leading coefficient, which is monic whenever both inputs are).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'): same roots as p, each simple. p must be monic.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Number of distinct complex roots.
int distinct_root_count(const IntPolynomial& p);

/// Multiplicity of `root` as a root of p (0 when not a root).
int root_multiplicity(const IntPolynomial& p, const mpz_class& root);

/// Integer roots of a monic polynomial with their multiplicities, descending.
std::vector<std::pair<mpz_class, int>> integer_roots(const IntPolynomial& p);

} // namespace gcover
