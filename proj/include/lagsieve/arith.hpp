#pragma once

#include "lagsieve/int_types.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lagsieve {

// p-adic valuation value. Infinity arises only as nu_p(0); every finite
// value is >= 0 and compares below Infinity.
class Valuation {
public:
    static Valuation infinity() { return Valuation(kInf); }
    static Valuation finite(std::int64_t v);

    bool is_infinite() const { return v_ == kInf; }
    std::int64_t value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend bool operator<(const Valuation& a, const Valuation& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a.v_ <= b.v_; }

private:
    explicit Valuation(std::int64_t v) : v_(v) {}
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t v_;
};

// Eratosthenes sieve over the odd numbers, extendable in blocks. Immutable
// from the caller's point of view except for extend(); the campaign keeps
// one instance and grows it as sweeps demand larger primes.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit = 1u << 16);

    std::uint64_t limit() const { return limit_; }
    void extend(std::uint64_t new_limit);

    bool is_prime(std::uint64_t n) const;       // requires n <= limit()
    bool is_prime_checked(std::uint64_t n);     // extends as needed

    // Primes in increasing order, all <= limit().
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    // Smallest prime > n (extends the sieve if necessary).
    std::uint64_t next_prime(std::uint64_t n);
    // Largest prime <= n, or nullopt if n < 2.
    std::optional<std::uint64_t> prev_prime(std::uint64_t n) const;

private:
    void sieve_block(std::uint64_t lo, std::uint64_t hi);
    std::uint64_t limit_;
    std::vector<bool> odd_composite_;   // index i <-> odd number 2i+1
    std::vector<std::uint64_t> primes_;
};

// nu_p(m) for m != 0. Rejects m = 0 (callers represent nu_p(0) as
// Valuation::infinity()) and non-prime p.
std::int64_t val_p(const Int& m, std::uint64_t p);
std::int64_t val_p(std::uint64_t m, std::uint64_t p);

// Unchecked inner-loop valuation (p assumed prime, m != 0).
inline std::int64_t val_p_unchecked(std::uint64_t m, std::uint64_t p) {
    std::int64_t v = 0;
    while (m % p == 0) { m /= p; ++v; }
    return v;
}

// sigma_p(l): sum of base-p digits.
std::uint64_t digit_sum(std::uint64_t l, std::uint64_t p);

// nu_p(l!) = (l - sigma_p(l)) / (p - 1)  (Legendre).
std::int64_t legendre_val_factorial(std::uint64_t l, std::uint64_t p);

// P(m): largest prime factor, with P(1) = 1.
std::uint64_t largest_prime_factor(const Int& m, PrimeSieve& sieve);

// Prime factorization by trial division over the sieve. Throws if a
// cofactor above the stated bound squared remains composite-or-unknown.
struct PrimePower {
    std::uint64_t p;
    std::uint32_t e;
};
std::vector<PrimePower> factorize(const Int& m, PrimeSieve& sieve);

// All positive divisors of the factored integer, ascending; throws if the
// divisor count exceeds max_count.
std::vector<Int> divisors(const std::vector<PrimePower>& fac,
                          std::size_t max_count = std::size_t(1) << 24);

// Primes p ≡ r (mod q) with x < p <= ratio*x, ascending. Requires x > 0,
// ratio > 1, gcd(r, q) = 1.
std::vector<std::uint64_t> primes_in_ap_interval(const Rat& x, const Rat& ratio,
                                                 std::uint64_t r, std::uint64_t q,
                                                 PrimeSieve& sieve);

// Maximum gap between consecutive primes ≡ r (mod q), both <= limit.
// Throws if fewer than two such primes exist.
std::uint64_t max_gap_in_residue_class(std::uint64_t limit, std::uint64_t r,
                                       std::uint64_t q, PrimeSieve& sieve);

} // namespace lagsieve
