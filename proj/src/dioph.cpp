#include "lagsieve/dioph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace lagsieve {

namespace {
constexpr std::uint64_t kSmoothPrimes[] = {2, 3, 5, 7, 11, 13};
}

bool SolutionTriple::validates(std::uint64_t max_prime, PrimeSieve& sieve) const {
    if (x + y != z || x > y || std::gcd(x, y) != 1) return false;
    for (std::uint64_t v : {x, y, z})
        if (largest_prime_factor(Int(v), sieve) > max_prime && v != 1) return false;
    return true;
}

std::map<std::uint64_t, std::int64_t> SolutionTriple::ords(std::uint64_t max_prime) const {
    std::map<std::uint64_t, std::int64_t> out;
    for (std::uint64_t p : kSmoothPrimes) {
        if (p > max_prime) break;
        out[p] = val_p_unchecked(x, p) + val_p_unchecked(y, p) + val_p_unchecked(z, p);
    }
    return out;
}

std::vector<std::uint64_t> smooth_numbers(std::uint64_t max_prime, std::uint64_t limit) {
    if (max_prime > 13) throw std::invalid_argument("smooth_numbers: max_prime <= 13");
    if (limit < 1) throw std::invalid_argument("smooth_numbers: limit >= 1");
    std::vector<std::uint64_t> out{1};
    for (std::uint64_t p : kSmoothPrimes) {
        if (p > max_prime) break;
        std::vector<std::uint64_t> next;
        next.reserve(out.size() * 2);
        for (std::uint64_t s : out)
            for (unsigned __int128 v = s; v <= limit; v *= p)
                next.push_back(static_cast<std::uint64_t>(v));
        out.swap(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SolutionTriple> sunit_solutions(std::uint64_t max_prime, std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sunit_solutions: limit >= 2");
    auto S = smooth_numbers(max_prime, limit);
    std::unordered_set<std::uint64_t> members(S.begin(), S.end());
    std::vector<SolutionTriple> out;
    for (std::uint64_t z : S) {
        if (z < 2) continue;
        for (std::uint64_t x : S) {
            if (2 * x > z) break;
            std::uint64_t y = z - x;
            if (members.count(y) && std::gcd(x, y) == 1) out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end(), [](const SolutionTriple& a, const SolutionTriple& b) {
        return std::tie(a.z, a.x) < std::tie(b.z, b.x);
    });
    return out;
}

std::vector<ExpSolution> solve_exp_equation(const ExpEquation& eq) {
    // enumerate rhs values once, index by value for the lhs scan
    std::vector<std::pair<Int, std::vector<std::uint32_t>>> rhs_vals;
    {
        std::vector<std::uint32_t> exps(eq.rhs.size(), 0);
        for (;;) {
            Int v = eq.multiplier;
            for (std::size_t i = 0; i < eq.rhs.size(); ++i)
                v *= int_pow(Int(eq.rhs[i].prime), exps[i]);
            rhs_vals.push_back({v, exps});
            std::size_t t = 0;
            for (; t < eq.rhs.size(); ++t) {
                if (++exps[t] <= eq.rhs[t].cap) break;
                exps[t] = 0;
            }
            if (t == eq.rhs.size()) break;
        }
    }
    std::vector<ExpSolution> out;
    std::vector<std::uint32_t> exps(eq.lhs.size(), 0);
    for (;;) {
        Int lhs = 1;
        for (std::size_t i = 0; i < eq.lhs.size(); ++i)
            lhs *= int_pow(Int(eq.lhs[i].prime), exps[i]);
        for (const auto& [rv, re] : rhs_vals)
            if (lhs - rv == eq.target) out.push_back({exps, re});
        std::size_t t = 0;
        for (; t < eq.lhs.size(); ++t) {
            if (++exps[t] <= eq.lhs[t].cap) break;
            exps[t] = 0;
        }
        if (t == eq.lhs.size()) break;
    }
    return out;
}

std::vector<std::uint64_t> s_m_set(std::uint64_t M, std::uint64_t limit) {
    if (M < 2) throw std::invalid_argument("s_m_set: M >= 2");
    // flag[n] set while n has all prime factors <= M; computed by dividing
    // out small primes with a rolling sieve
    std::vector<std::uint64_t> residue(limit + 2);
    std::iota(residue.begin(), residue.end(), 0);
    PrimeSieve sieve(std::max<std::uint64_t>(M + 1, 16));
    for (std::uint64_t p : sieve.primes()) {
        if (p > M) break;
        for (std::uint64_t q = p; q <= limit + 1; q += p)
            while (residue[q] % p == 0) residue[q] /= p;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (residue[n] == 1 && residue[n + 1] == 1) out.push_back(n);
    return out;
}

} // namespace lagsieve
