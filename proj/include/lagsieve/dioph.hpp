#pragma once

#include "lagsieve/arith.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lagsieve {

// One solution of x + y = z in smooth numbers with gcd(x, y) = 1, x <= y.
struct SolutionTriple {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t z = 0;

    bool validates(std::uint64_t max_prime, PrimeSieve& sieve) const;
    std::map<std::uint64_t, std::int64_t> ords(std::uint64_t max_prime) const;
    friend auto operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
};

// All max_prime-smooth naturals <= limit, ascending.
std::vector<std::uint64_t> smooth_numbers(std::uint64_t max_prime, std::uint64_t limit);

// All triples with z <= limit, sorted by (z, x): hash the smooth set and
// scan pairs (x, z) with a membership test on y = z - x.
std::vector<SolutionTriple> sunit_solutions(std::uint64_t max_prime, std::uint64_t limit);

// Bounded exponential equation
//   prod lhs_primes[i]^{e_i}  -  multiplier * prod rhs_primes[j]^{f_j}  =  target
// with per-exponent caps; solved by exhaustive exact enumeration.
struct ExpEquation {
    struct Term {
        std::uint64_t prime;
        std::uint32_t cap;
    };
    std::vector<Term> lhs;
    std::vector<Term> rhs;
    Int multiplier = 1;
    Int target = 0;
};

struct ExpSolution {
    std::vector<std::uint32_t> lhs_exps;
    std::vector<std::uint32_t> rhs_exps;
    friend bool operator==(const ExpSolution&, const ExpSolution&) = default;
};

std::vector<ExpSolution> solve_exp_equation(const ExpEquation& eq);

// S_M = {n <= limit : P(n(n+1)) <= M}.
std::vector<std::uint64_t> s_m_set(std::uint64_t M, std::uint64_t limit);

} // namespace lagsieve
