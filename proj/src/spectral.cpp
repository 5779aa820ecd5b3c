#include "gcover/spectral.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace gcover {

// ---------------------------------------------------------------------------
// Characteristic polynomial: Hessenberg reduction modulo word-size primes,
// recombined with the Chinese remainder theorem.

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p)
{
    return (a * b) % p;
}

u64 pow_mod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p)
{
    return pow_mod(a, p - 2, p);
}

bool is_prime(u64 x)
{
    if (x < 2)
        return false;
    for (u64 d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

// Primes just below 2^31, descending; products of two residues fit in 64 bits.
const std::vector<u64>& crt_primes(std::size_t count)
{
    static std::vector<u64> primes;
    u64 candidate = primes.empty() ? (u64{1} << 31) - 1 : primes.back() - 2;
    while (primes.size() < count) {
        if (is_prime(candidate))
            primes.push_back(candidate);
        candidate -= 2;
    }
    return primes;
}

std::vector<u64> char_poly_mod(const IntMatrix& a, u64 p)
{
    const std::size_t n = a.rows();
    Matrix<u64> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t v = a(i, j) % static_cast<std::int64_t>(p);
            h(i, j) = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }

    // Similarity transform to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h(pivot, j) == 0)
            ++pivot;
        if (pivot == n)
            continue;
        if (pivot != j + 1) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(h(pivot, k), h(j + 1, k));
            for (std::size_t k = 0; k < n; ++k)
                std::swap(h(k, pivot), h(k, j + 1));
        }
        u64 inv = inv_mod(h(j + 1, j), p);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h(i, j) == 0)
                continue;
            u64 u = mul_mod(h(i, j), inv, p);
            for (std::size_t k = 0; k < n; ++k)
                h(i, k) = (h(i, k) + p - mul_mod(u, h(j + 1, k), p)) % p;
            for (std::size_t k = 0; k < n; ++k)
                h(k, j + 1) = (h(k, j + 1) + mul_mod(u, h(k, i), p)) % p;
        }
    }

    // polys[m] = characteristic polynomial of the leading m x m block.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<u64> next(m + 2, 0);
        // (x - h(m,m)) * polys[m]
        for (std::size_t i = 0; i <= m; ++i) {
            next[i + 1] = (next[i + 1] + polys[m][i]) % p;
            next[i] = (next[i] + p - mul_mod(h(m, m), polys[m][i], p)) % p;
        }
        u64 sub = 1;
        for (std::size_t i = m; i-- > 0;) {
            sub = mul_mod(sub, h(i + 1, i), p);
            if (sub == 0)
                break;
            u64 coef = mul_mod(h(i, m), sub, p);
            for (std::size_t k = 0; k < polys[i].size(); ++k)
                next[k] = (next[k] + p - mul_mod(coef, polys[i][k], p)) % p;
        }
        polys[m + 1] = std::move(next);
    }
    return polys[n];
}

} // namespace

IntPolynomial char_poly(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw ContractViolation("char_poly: matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0)
        return IntPolynomial::constant(1);

    // Every coefficient is a signed sum of principal minors, bounded by
    // prod_i (1 + ||row_i||_2) via Hadamard's inequality.
    double bits = 2;
    for (std::size_t i = 0; i < n; ++i) {
        double norm2 = 0;
        for (std::size_t j = 0; j < n; ++j)
            norm2 += static_cast<double>(a(i, j)) * static_cast<double>(a(i, j));
        bits += std::log2(1.0 + std::sqrt(norm2));
    }
    const auto count = static_cast<std::size_t>(std::ceil((bits + 8) / 30.0));
    const auto& primes = crt_primes(count);

    std::vector<mpz_class> coeffs(n + 1, 0);
    mpz_class modulus = 1;
    for (std::size_t k = 0; k < count; ++k) {
        const u64 p = primes[k];
        auto residues = char_poly_mod(a, p);
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class m_inv;
        mpz_class m_mod = modulus % pz;
        mpz_invert(m_inv.get_mpz_t(), m_mod.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t i = 0; i <= n; ++i) {
            // x = c + modulus * ((r - c) * modulus^{-1} mod p)
            mpz_class diff = mpz_class(static_cast<unsigned long>(residues[i])) - coeffs[i];
            mpz_class t = (diff % pz) * m_inv % pz;
            if (t < 0)
                t += pz;
            coeffs[i] += modulus * t;
        }
        modulus *= pz;
    }
    mpz_class half = modulus / 2;
    for (auto& c : coeffs)
        if (c > half)
            c -= modulus;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly(const Graph& g)
{
    return char_poly(g.adjacency_matrix());
}

// ---------------------------------------------------------------------------
// Spectra.

int Spectrum::dimension() const
{
    int d = 0;
    for (const auto& e : entries)
        d += e.multiplicity;
    return d;
}

std::vector<double> Spectrum::expanded() const
{
    std::vector<double> out;
    for (const auto& e : entries)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    return out;
}

double frobenius_norm(const ComplexMatrix& m)
{
    double s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += std::norm(m(i, j));
    return std::sqrt(s);
}

ComplexMatrix to_complex(const IntMatrix& m)
{
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = static_cast<double>(m(i, j));
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input)
{
    using cplx = std::complex<double>;
    if (input.rows() != input.cols())
        throw ContractViolation("hermitian_spectrum: matrix must be square");
    const std::size_t n = input.rows();
    const double norm = frobenius_norm(input);
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(input(i, j) - std::conj(input(j, i))) > 10 * eps * norm)
                throw ContractViolation("hermitian_spectrum: matrix is not Hermitian");

    ComplexMatrix a = input;
    for (std::size_t i = 0; i < n; ++i)
        a(i, i) = a(i, i).real();

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    const int max_sweeps = 100;
    const double target = static_cast<double>(n + 1) * eps * std::max(norm, 1e-300);
    bool converged = off_norm() <= target;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= std::numeric_limits<double>::min())
                    continue;
                // U = diag(1, conj(phase)) * R makes the (p,q) entry real,
                // then the real rotation R annihilates it.
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const cplx u00 = c;
                const cplx u01 = s;
                const cplx u10 = -s * std::conj(phase);
                const cplx u11 = c * std::conj(phase);
                // A <- A U
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = akp * u00 + akq * u10;
                    a(k, q) = akp * u01 + akq * u11;
                }
                // A <- U^H A
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
                    a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        converged = off_norm() <= target;
    }
    if (!converged)
        throw NumericError("hermitian_spectrum: Jacobi sweeps did not converge");

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = a(i, i).real();
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

Spectrum cluster_eigenvalues(const std::vector<double>& descending, double tol, double scale)
{
    Spectrum s;
    const double gap = tol * std::max(1.0, scale);
    for (double v : descending) {
        if (!s.entries.empty() && std::abs(s.entries.back().value - v) <= gap) {
            // Keep a running mean so the reported value sits inside the cluster.
            auto& e = s.entries.back();
            e.value = (e.value * e.multiplicity + v) / (e.multiplicity + 1);
            ++e.multiplicity;
        } else {
            s.entries.push_back({v, 1});
        }
    }
    return s;
}

Spectrum hermitian_spectrum(const ComplexMatrix& m, double tol)
{
    if (!(tol > 0))
        throw ContractViolation("hermitian_spectrum: tolerance must be positive");
    return cluster_eigenvalues(hermitian_eigenvalues(m), tol, frobenius_norm(m));
}

Spectrum hermitian_spectrum(const RealMatrix& m, double tol)
{
    ComplexMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = m(i, j);
    return hermitian_spectrum(c, tol);
}

Spectrum hermitian_spectrum(const IntMatrix& m, double tol)
{
    return hermitian_spectrum(to_complex(m), tol);
}

// ---------------------------------------------------------------------------
// Representation matrices.

std::vector<std::vector<int>> characters(const GroupSpec& group)
{
    if (!group.is_abelian())
        throw UnsupportedError("characters are only available for abelian gain groups");
    std::vector<std::vector<int>> out;
    for (std::int64_t i = 0; i < group.order(); ++i)
        out.push_back(group.element_at(i).values);
    return out;
}

RepMatrix rep_matrix(const GainGraph& f, const std::vector<int>& character)
{
    const auto& group = f.group();
    if (!group.is_abelian())
        throw UnsupportedError("rep_matrix requires an abelian gain group");
    const auto& orders = group.orders();
    if (character.size() != orders.size())
        throw ContractViolation("character index has the wrong number of components");
    for (std::size_t p = 0; p < orders.size(); ++p)
        if (character[p] < 0 || character[p] >= orders[p])
            throw ContractViolation("character index out of range");

    const auto n = static_cast<std::size_t>(f.base().order());
    RepMatrix s{ComplexMatrix(n, n), character};
    const auto& edges = f.base().edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& g = f.gains()[e].values;
        // Phase as an exact fraction of a full turn, reduced before use.
        double turn = 0;
        for (std::size_t p = 0; p < orders.size(); ++p)
            turn += static_cast<double>((static_cast<long>(character[p]) * g[p]) % orders[p]) / orders[p];
        turn -= std::floor(turn);
        const double angle = 2 * std::numbers::pi * turn;
        // Snap the exactly representable roots of unity.
        auto snap = [](double x) {
            for (double exact : {-1.0, 0.0, 1.0})
                if (std::abs(x - exact) < 1e-15)
                    return exact;
            return x;
        };
        const std::complex<double> value{snap(std::cos(angle)), snap(std::sin(angle))};
        auto [u, v] = edges[e];
        s.entries(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = value;
        s.entries(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = std::conj(value);
    }
    return s;
}

IntMatrix signed_adjacency(const GainGraph& f)
{
    if (!(f.group().is_cyclic() && f.group().orders()[0] == 2))
        throw UnsupportedError("signed_adjacency requires gains in Z_2");
    const auto n = static_cast<std::size_t>(f.base().order());
    IntMatrix s(n, n);
    const auto& edges = f.base().edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        std::int64_t sign = f.gains()[e].values[0] == 0 ? 1 : -1;
        s(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = sign;
        s(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = sign;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Two-eigenvalue classification.

TwoEvCertificate classify_two_ev(const GainGraph& f)
{
    if (!is_connected(f.base()))
        throw ContractViolation("classify_two_ev requires a connected base");
    return classify_two_ev(f, lift(f));
}

TwoEvCertificate classify_two_ev(const GainGraph& f, const CoverGraph& cover)
{
    if (!is_connected(f.base()))
        throw ContractViolation("classify_two_ev requires a connected base");
    TwoEvCertificate cert;
    cert.base_poly = char_poly(f.base());
    cert.cover_poly = char_poly(cover.graph);
    auto [q, rem] = divide(cert.cover_poly, cert.base_poly);
    if (!rem.is_zero())
        throw ConsistencyError("base characteristic polynomial does not divide the cover's");
    cert.quotient = q;
    cert.cover_connected = components(cover).size() == 1;

    IntPolynomial sf = square_free_part(q);
    cert.distinct_new = std::max(0, sf.degree());
    cert.is_two_ev = sf.degree() == 2;
    if (!cert.is_two_ev)
        return cert;

    // sf = x^2 - lambda x - mu
    const mpz_class lambda = -sf.coefficient(1);
    const mpz_class mu = -sf.coefficient(0);
    if (!lambda.fits_slong_p() || !mu.fits_slong_p())
        throw NumericError("classify_two_ev: eigenvalue parameters overflow");
    cert.lambda_exact = lambda.get_si();
    cert.mu_exact = mu.get_si();
    cert.lambda = static_cast<double>(cert.lambda_exact);
    cert.mu = static_cast<double>(cert.mu_exact);

    const mpz_class disc = lambda * lambda + 4 * mu;
    if (disc <= 0)
        throw ConsistencyError("new eigenvalues of a symmetric matrix are not real and distinct");
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        mpz_class root = sqrt(disc);
        mpz_class theta = (lambda + root) / 2;
        mpz_class tau = (lambda - root) / 2;
        cert.rational = true;
        cert.theta = theta.get_d();
        cert.tau = tau.get_d();
        cert.mult_theta = root_multiplicity(q, theta);
        cert.mult_tau = root_multiplicity(q, tau);
    } else {
        // Irreducible over Q: q is a power of sf, so both roots share multiplicity.
        const double r = std::sqrt(disc.get_d());
        cert.theta = (cert.lambda + r) / 2;
        cert.tau = (cert.lambda - r) / 2;
        cert.mult_theta = cert.mult_tau = q.degree() / 2;
    }
    if (cert.mult_theta + cert.mult_tau != q.degree())
        throw ConsistencyError("new eigenvalue multiplicities do not fill the quotient");
    return cert;
}

MinpolyCertificate minpoly_certificate(const RepMatrix& s, std::optional<int> valency, double tol)
{
    MinpolyCertificate cert;
    Spectrum spec = hermitian_spectrum(s.entries, tol);
    cert.distinct = spec.distinct();
    if (spec.distinct() != 2) {
        cert.status = MinpolyCertificate::Status::not_two_ev;
        return cert;
    }
    cert.theta = spec.entries[0].value;
    cert.tau = spec.entries[1].value;
    cert.lambda = cert.theta + cert.tau;
    cert.mu = -cert.theta * cert.tau;

    const auto& m = s.entries;
    const std::size_t n = m.rows();
    const ComplexMatrix sq = m * m;
    const double radius = std::max(std::abs(cert.theta), std::abs(cert.tau));
    const double bound = 1e-8 * std::max(1.0, radius * radius);
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> r = sq(i, j) - cert.lambda * m(i, j) - (i == j ? cert.mu : 0.0);
            worst = std::max(worst, std::abs(r));
        }
    if (worst > bound) {
        cert.status = MinpolyCertificate::Status::residual;
        return cert;
    }
    if (valency) {
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(m(i, i)) > bound) {
                cert.status = MinpolyCertificate::Status::nonzero_diagonal;
                return cert;
            }
        if (std::abs(cert.mu - *valency) > tol * std::max(1, *valency)) {
            cert.status = MinpolyCertificate::Status::valency_mismatch;
            return cert;
        }
    }
    cert.status = MinpolyCertificate::Status::ok;
    return cert;
}

} // namespace gcover
