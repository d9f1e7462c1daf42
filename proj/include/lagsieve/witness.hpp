#pragma once

#include "lagsieve/polys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lagsieve {

// A coefficient vector (|a_0| = |a_n| = 1) together with a verified monic
// factor of the polynomial it builds. When squared_model is set the factor
// divides psi_n^{(alpha)}(x^2) rather than psi_n^{(alpha)}(x).
struct FactorWitness {
    std::uint64_t n = 0;
    AlphaParam alpha;
    std::vector<Int> coeffs;
    IntPoly factor;
    bool squared_model = false;
    bool verified = false;

    IntPoly target_polynomial() const;
    // Exact-division re-check; never trust the stored flag.
    bool revalidate() const;
};

enum class WitnessStatus { Found, NotSolvable, ScopeExceeded };

struct WitnessResult {
    WitnessStatus status = WitnessStatus::NotSolvable;
    std::optional<FactorWitness> witness;
};

// Mechanizes "equate the remainder to 0 and solve in integers": the fixed
// part comes from a_0, a_n, the free coefficients are B_j * (-b)^j.
// Solvable iff the gcd of the free coefficients divides the negated fixed
// part.
struct LinearSystemInstance {
    Int fixed = 0;                 // -(s0 B_0 + sn B_n (-b)^n)
    std::vector<Int> free_terms;   // B_j (-b)^j for the free indices

    bool solvable() const;
    // A solution with each entry reduced into the symmetric residue system
    // of its back-substitution modulus (keeps magnitudes small).
    std::optional<std::vector<Int>> solve() const;
};

// Witness with factor x + b of psi_n^{(alpha)}(x), for the sign choice
// a_0 = sign_a0, a_n = sign_an.
WitnessResult linear_witness(std::uint64_t n, const AlphaParam& alpha, const Int& b,
                             int sign_a0, int sign_an);

// Witness with factor x^2 + q0. For integer alpha this divides
// psi_n^{(alpha)}(x) (two decoupled remainder constraints); for half-integer
// alpha it divides psi_n^{(alpha)}(x^2), which reduces to the root -q0 of
// the y-model. Pairs with n beyond the search scope report ScopeExceeded.
WitnessResult quadratic_witness(std::uint64_t n, const AlphaParam& alpha, const Int& q0);

// x + b factor of psi ->  x - b factor of the (-1)^(n-j) twist.
FactorWitness mirror_witness(const FactorWitness& w);

// All integer roots, found among divisors of the constant term, each
// verified by evaluation. Rejects a zero constant term (strip x powers
// first).
std::vector<Int> rational_roots(const IntPoly& p, PrimeSieve& sieve);

// All monic quadratic divisors x^2 + c1 x + c0 of a monic (up to sign)
// polynomial: c0 runs over divisors of the constant term, |c1| within twice
// the Cauchy root bound. Even polynomials take the fast even-part route.
std::vector<IntPoly> bounded_quadratic_factors(const IntPoly& p, PrimeSieve& sieve);

// Independent factor oracle: degrees 1 and 2 complete via the two searches
// above; degrees >= 3 (degree of p at most 12) by Kronecker interpolation
// over divisor tuples of p(t) at small integer nodes.
std::map<std::int64_t, std::vector<IntPoly>> brute_force_factor_oracle(const IntPoly& p,
                                                                       std::int64_t k_max,
                                                                       PrimeSieve& sieve);

} // namespace lagsieve
