#include "gcover/polynomial.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gcover {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending)
    : coeffs_(std::move(ascending))
{
    trim();
}

IntPolynomial IntPolynomial::linear(const mpz_class& root)
{
    return IntPolynomial({-root, mpz_class(1)});
}

IntPolynomial IntPolynomial::constant(const mpz_class& c)
{
    return IntPolynomial({c});
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double IntPolynomial::evaluate(double x) const
{
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

IntPolynomial IntPolynomial::derivative() const
{
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reflected() const
{
    auto c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::pow(unsigned e) const
{
    IntPolynomial out = constant(1);
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const
{
    auto c = coeffs_;
    for (auto& x : c)
        x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = (mag == 1);
        if (!unit || i == 0)
            os << mag.get_str();
        if (i > 0) {
            if (!unit)
                os << '*';
            os << 'x';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& monic_divisor)
{
    if (!monic_divisor.is_monic())
        throw ContractViolation("divide: divisor must be monic");
    const int dd = monic_divisor.degree();
    auto rem = dividend.coefficients();
    if (dividend.degree() < dd)
        return {IntPolynomial{}, dividend};
    const auto& dc = monic_divisor.coefficients();
    std::vector<mpz_class> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    for (int i = dividend.degree(); i >= dd; --i) {
        mpz_class lead = rem[static_cast<std::size_t>(i)];
        if (lead == 0)
            continue;
        quot[static_cast<std::size_t>(i - dd)] = lead;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= lead * dc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void make_monic(RatPoly& p)
{
    mpq_class lead = p.back();
    for (auto& c : p)
        c /= lead;
}

RatPoly remainder(RatPoly a, const RatPoly& b)
{
    // b monic
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        mpq_class lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] -= lead * b[j];
        a.pop_back();
        trim(a);
    }
    trim(a);
    return a;
}

} // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    RatPoly x, y;
    for (const auto& c : a.coefficients())
        x.emplace_back(c);
    for (const auto& c : b.coefficients())
        y.emplace_back(c);
    if (x.empty())
        std::swap(x, y);
    if (x.empty())
        return {};
    make_monic(x);
    while (!y.empty()) {
        make_monic(y);
        RatPoly r = remainder(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    // Primitive integer multiple of the monic gcd.
    mpz_class den = 1;
    for (auto& c : x)
        den = lcm(den, c.get_den());
    std::vector<mpz_class> out;
    mpz_class content = 0;
    for (auto& c : x) {
        mpq_class scaled = c * den;
        out.push_back(scaled.get_num());
        content = ::gcd(content, out.back());
    }
    if (content != 0)
        for (auto& c : out)
            c /= content;
    return IntPolynomial(std::move(out));
}

IntPolynomial square_free_part(const IntPolynomial& p)
{
    if (!p.is_monic())
        throw ContractViolation("square_free_part: polynomial must be monic");
    if (p.degree() <= 1)
        return p;
    IntPolynomial g = gcd(p, p.derivative());
    if (!g.is_monic())
        throw ConsistencyError("gcd of monic integer polynomials is not monic");
    auto [q, r] = divide(p, g);
    if (!r.is_zero())
        throw ConsistencyError("gcd does not divide its argument");
    return q;
}

int distinct_root_count(const IntPolynomial& p)
{
    return std::max(0, square_free_part(p).degree());
}

int root_multiplicity(const IntPolynomial& p, const mpz_class& root)
{
    if (p.is_zero())
        throw ContractViolation("root_multiplicity of the zero polynomial");
    int m = 0;
    IntPolynomial cur = p;
    IntPolynomial factor = IntPolynomial::linear(root);
    while (cur.degree() >= 1) {
        auto [q, r] = divide(cur, factor);
        if (!r.is_zero())
            break;
        ++m;
        cur = std::move(q);
    }
    return m;
}

std::vector<std::pair<mpz_class, int>> integer_roots(const IntPolynomial& p)
{
    if (!p.is_monic())
        throw ContractViolation("integer_roots: polynomial must be monic");
    IntPolynomial sf = square_free_part(p);
    const int n = sf.degree();
    // Fujiwara: every root has modulus below 2 max |a_{n-i}|^{1/i}.
    mpz_class bound = 1;
    for (int i = 1; i <= n; ++i) {
        mpz_class c = abs(sf.coefficient(n - i));
        if (c == 0)
            continue;
        mpz_class root;
        mpz_root(root.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
        root += 1;
        if (root > bound)
            bound = root;
    }
    bound *= 2;
    if (!bound.fits_slong_p())
        throw NumericError("integer_roots: root bound too large");
    std::vector<std::pair<mpz_class, int>> out;
    for (long x = bound.get_si(); x >= -bound.get_si(); --x)
        if (sf.evaluate(mpz_class(x)) == 0)
            out.emplace_back(mpz_class(x), root_multiplicity(p, mpz_class(x)));
    return out;
}

} // namespace gcover
