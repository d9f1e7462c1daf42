#include "lagsieve/polys.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace lagsieve {

AlphaParam::AlphaParam(std::int64_t u_, std::uint32_t a_, std::uint32_t d_)
    : u(u_), a(a_), d(d_) {
    if (d < 1) throw std::invalid_argument("AlphaParam: d must be >= 1");
    if (d == 1 && a != 0) throw std::invalid_argument("AlphaParam: a must be 0 when d = 1");
    if (d > 1 && (a < 1 || a >= d || std::gcd(a, d) != 1))
        throw std::invalid_argument("AlphaParam: need 1 <= a < d with gcd(a,d) = 1");
}

std::vector<Int> coefficient_scale(std::uint64_t n, const AlphaParam& alpha) {
    std::vector<Int> B(n + 1);
    B[n] = 1;   // empty product: leading coefficient is a_n itself
    Int prod = 1;
    for (std::int64_t j = static_cast<std::int64_t>(n) - 1; j >= 0; --j) {
        prod *= alpha.term(j + 1);
        // binomial recurrence: C(n,j) = C(n,j+1) * (j+1) / (n-j)
        B[j] = prod;
    }
    // fold in binomials
    Int binom = 1;
    for (std::uint64_t j = 1; j <= n; ++j) {
        binom = binom * (n - j + 1) / j;
        B[j] *= binom;
    }
    return B;
}

IntPoly build_psi(std::uint64_t n, const AlphaParam& alpha, std::span<const Int> a) {
    if (n < 1) throw std::invalid_argument("build_psi: n >= 1 required");
    if (a.size() != n + 1) throw std::invalid_argument("build_psi: coefficient vector length mismatch");
    auto B = coefficient_scale(n, alpha);
    std::vector<Int> c(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j) c[j] = a[j] * B[j];
    return IntPoly(std::move(c));
}

IntPoly build_g(std::uint64_t n, const AlphaParam& alpha) {
    if (n < 1) throw std::invalid_argument("build_g: n >= 1 required");
    return IntPoly(coefficient_scale(n, alpha));
}

IntPoly build_script_L(std::uint64_t n, std::int64_t u) {
    return build_g(n, AlphaParam::half(u));
}

RatPoly laguerre_reference(std::uint64_t n, const Rat& alpha) {
    // L_n^{(alpha)}(x) = sum_j [(n+alpha)...(j+1+alpha) / ((n-j)! j!)] (-x)^j
    std::vector<Rat> c(n + 1);
    Rat prod = 1;
    std::vector<Rat> tail(n + 1);
    tail[n] = 1;
    for (std::int64_t j = static_cast<std::int64_t>(n) - 1; j >= 0; --j) {
        prod *= alpha + Rat(j + 1);
        tail[j] = prod;
    }
    Int fact_nj = 1, fact_j = 1;
    for (std::uint64_t j = 0; j <= n; ++j) {
        Int fnj = 1;
        for (std::uint64_t i = 2; i <= n - j; ++i) fnj *= i;
        Int fj = 1;
        for (std::uint64_t i = 2; i <= j; ++i) fj *= i;
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        c[j] = sign * tail[j] / Rat(fnj * fj);
    }
    return RatPoly(std::move(c));
}

Rat disc_formula(std::uint64_t n, std::int64_t u) {
    if (n < 1) throw std::invalid_argument("disc_formula: n >= 1 required");
    Rat d = 1;
    Rat half = Rat(2 * u + 1, 2);
    for (std::uint64_t j = 2; j <= n; ++j) {
        Rat jj = 1;
        for (std::uint64_t i = 0; i < j; ++i) jj *= Rat(j);
        Rat base = half + Rat(j);
        Rat be = 1;
        for (std::uint64_t i = 0; i + 1 < j; ++i) be *= base;
        d *= jj * be;
    }
    return d;
}

namespace {

// Bareiss fraction-free determinant of an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

Rat disc_oracle(const RatPoly& p) {
    std::int64_t m = p.degree();
    if (m < 1) throw std::invalid_argument("disc_oracle: degree >= 1 required");
    Int lcd = p.common_denominator();
    IntPoly P = p.cleared();           // P = lcd * p
    IntPoly dP = P.derivative();
    // Sylvester matrix of P (degree m) and P' (degree m-1): (2m-1) x (2m-1)
    std::size_t dim = static_cast<std::size_t>(2 * m - 1);
    std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
    for (std::int64_t r = 0; r < m - 1; ++r)
        for (std::int64_t j = 0; j <= m; ++j)
            s[r][r + (m - j)] = P[j];
    for (std::int64_t r = 0; r < m; ++r)
        for (std::int64_t j = 0; j <= m - 1; ++j)
            s[m - 1 + r][r + (m - 1 - j)] = dP[j];
    Int res = bareiss_det(std::move(s));
    Rat disc = Rat(res) / Rat(P.leading());
    if (((m * (m - 1)) / 2) % 2) disc = -disc;
    // Disc(c*p) = c^(2m-2) Disc(p); undo the clearing scale.
    Rat scale = 1;
    for (std::int64_t i = 0; i < 2 * m - 2; ++i) scale *= Rat(lcd);
    return disc / scale;
}

SquareClass SquareClass::of(const Rat& x, PrimeSieve& sieve) {
    if (x == 0) throw std::invalid_argument("SquareClass: zero has no class");
    SquareClass c;
    Int sq = 1;
    for (const Int& part : {numerator(x), denominator(x)}) {
        for (const auto& pp : factorize(part, sieve))
            if (pp.e % 2) sq *= pp.p;
    }
    c.num = (x < 0) ? -sq : sq;
    c.den = 1;
    return c;
}

SquareClass square_class_b(std::uint64_t n, std::int64_t u, PrimeSieve& sieve) {
    if (n < 1) throw std::invalid_argument("square_class_b: n >= 1 required");
    // parity of each prime exponent in the defining product of b
    std::map<std::uint64_t, int> par;
    auto mul = [&](Int t) {
        for (const auto& pp : factorize(t, sieve)) par[pp.p] ^= (pp.e & 1);
    };
    std::uint64_t r = n % 4;
    Int w = 2 * Int(u) + 1;
    if (r == 1 || r == 3) {
        for (std::uint64_t t = 3; t <= n; t += 2) mul(Int(t));
        for (std::uint64_t j = 4; j + 1 <= 2 * (n - 1) + 1; j += 4) mul(w + j);
    } else {
        for (std::uint64_t t = 3; t + 1 <= n; t += 2) mul(Int(t));
        for (std::uint64_t j = 4; j <= 2 * n; j += 4) mul(w + j);
    }
    if (r == 2 || r == 3) par[2] ^= 1;   // the 2^delta denominator
    SquareClass c;
    Int sq = 1;
    for (auto& [p, e] : par)
        if (e) sq *= p;
    c.num = sq;
    c.den = 1;
    return c;
}

} // namespace lagsieve
