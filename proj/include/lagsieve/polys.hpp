#pragma once

#include "lagsieve/arith.hpp"
#include "lagsieve/poly.hpp"

#include <cstdint>
#include <span>

namespace lagsieve {

// alpha = u + a/d in the unique canonical form: d >= 1, a = 0 when d = 1,
// otherwise 1 <= a < d with gcd(a, d) = 1.
struct AlphaParam {
    std::int64_t u = 0;
    std::uint32_t a = 0;
    std::uint32_t d = 1;

    AlphaParam() = default;
    AlphaParam(std::int64_t u_, std::uint32_t a_, std::uint32_t d_);
    static AlphaParam integer(std::int64_t u) { return AlphaParam(u, 0, 1); }
    static AlphaParam half(std::int64_t u) { return AlphaParam(u, 1, 2); }

    Rat value() const { return Rat(u) + Rat(a, d); }
    bool is_integer() const { return d == 1; }
    bool is_half() const { return d == 2 && a == 1; }

    // The linear term a + (u + i) * d entering every coefficient product.
    Int term(std::int64_t i) const { return Int(a) + (Int(u) + i) * d; }

    friend bool operator==(const AlphaParam&, const AlphaParam&) = default;
};

// Coefficient scale of psi/g: B_j = C(n,j) * prod_{i=j+1}^{n} (a+(u+i)d).
// Computed with running partial products from j = n down (O(n) multiplies).
std::vector<Int> coefficient_scale(std::uint64_t n, const AlphaParam& alpha);

// psi_n^{(alpha)}(x; a_0..a_n): coefficient of x^j is a_j * B_j.
IntPoly build_psi(std::uint64_t n, const AlphaParam& alpha, std::span<const Int> a);

// g_n^{(alpha)}(x): the all-ones twist; its Newton polygons bound those of
// every psi with the same (n, alpha).
IntPoly build_g(std::uint64_t n, const AlphaParam& alpha);

// script-L_n^{(u)}(x) = sum C(n,j) (1+2(u+n))...(1+2(u+j+1)) x^j, i.e. the
// d=2 companion; satisfies L_n^{(u)}(2x) = 2^n n! L_n^{(u+1/2)}(-x).
IntPoly build_script_L(std::uint64_t n, std::int64_t u);

// Generalized Laguerre polynomial with exact rational coefficients.
RatPoly laguerre_reference(std::uint64_t n, const Rat& alpha);

// Product formula for Disc(script-L_n^{(u)}): prod_{j=2}^n j^j ((2u+1)/2 + j)^(j-1).
// Agrees with the direct discriminant only up to a rational square; callers
// compare square classes.
Rat disc_formula(std::uint64_t n, std::int64_t u);

// Independent discriminant via the Sylvester resultant of p and p',
// (-1)^(m(m-1)/2) Res(p, p') / lc(p), computed fraction-free.
Rat disc_oracle(const RatPoly& p);

// A rational modulo nonzero rational squares, stored as a signed squarefree
// integer over denominator 1 (unique representative).
struct SquareClass {
    Int num = 1;
    Int den = 1;

    static SquareClass of(const Rat& x, PrimeSieve& sieve);
    bool is_trivial() const { return num == 1 && den == 1; }
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

inline bool is_square_class_trivial(const SquareClass& c) { return c.is_trivial(); }

// The value b of the D_n^{(u)} = b Y^2 decomposition, reduced to its square
// class. Accumulates exponent parities factor by factor, so no big product
// is ever materialized.
SquareClass square_class_b(std::uint64_t n, std::int64_t u, PrimeSieve& sieve);

} // namespace lagsieve
