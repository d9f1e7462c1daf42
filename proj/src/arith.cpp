#include "lagsieve/arith.hpp"

#include <algorithm>
#include <cmath>

namespace lagsieve {

Valuation Valuation::finite(std::int64_t v) {
    if (v < 0) throw std::invalid_argument("Valuation: finite value must be >= 0");
    if (v == kInf) throw std::invalid_argument("Valuation: overflow");
    return Valuation(v);
}

std::int64_t Valuation::value() const {
    if (is_infinite()) throw std::logic_error("Valuation: value() on infinity");
    return v_;
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(1) {
    extend(std::max<std::uint64_t>(limit, 4));
}

void PrimeSieve::extend(std::uint64_t new_limit) {
    if (new_limit <= limit_) return;
    std::uint64_t old = limit_;
    limit_ = new_limit;
    odd_composite_.resize(limit_ / 2 + 1, false);
    if (old < 2 && limit_ >= 2) primes_.clear();
    // mark composites among odd numbers in (old, limit_]
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit_))) + 2;
    for (std::uint64_t p = 3; p <= root; p += 2) {
        if (odd_composite_[p / 2]) continue;
        std::uint64_t start = std::max(p * p, ((old / p + 1) * p) | 1);
        if (start % p != 0) start += p;   // keep start an odd multiple of p
        if (start % 2 == 0) start += p;
        for (std::uint64_t m = std::max(p * p, start); m <= limit_; m += 2 * p)
            odd_composite_[m / 2] = true;
    }
    primes_.clear();
    primes_.push_back(2);
    for (std::uint64_t n = 3; n <= limit_; n += 2)
        if (!odd_composite_[n / 2]) primes_.push_back(n);
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("PrimeSieve::is_prime beyond limit");
    if (n < 2) return false;
    if (n == 2) return true;
    if (n % 2 == 0) return false;
    return !odd_composite_[n / 2];
}

bool PrimeSieve::is_prime_checked(std::uint64_t n) {
    if (n > limit_) extend(std::max(n, limit_ * 2));
    return is_prime(n);
}

std::uint64_t PrimeSieve::next_prime(std::uint64_t n) {
    for (;;) {
        if (n + 1 > limit_) extend(std::max<std::uint64_t>(2 * limit_, n + 1000));
        for (std::uint64_t m = n + 1; m <= limit_; ++m)
            if (is_prime(m)) return m;
        n = limit_;
    }
}

std::optional<std::uint64_t> PrimeSieve::prev_prime(std::uint64_t n) const {
    for (std::uint64_t m = std::min(n, limit_); m >= 2; --m)
        if (is_prime(m)) return m;
    return std::nullopt;
}

std::int64_t val_p(const Int& m, std::uint64_t p) {
    if (m == 0) throw std::invalid_argument("val_p: m = 0 (use Valuation::infinity)");
    {
        // reject non-prime p by trial division; p is always small here
        if (p < 2) throw std::invalid_argument("val_p: p not prime");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("val_p: p not prime");
    }
    Int a = abs(m);
    std::int64_t v = 0;
    Int q, r;
    for (;;) {
        divide_qr(a, Int(p), q, r);
        if (r != 0) break;
        a = q;
        ++v;
    }
    return v;
}

std::int64_t val_p(std::uint64_t m, std::uint64_t p) { return val_p(Int(m), p); }

std::uint64_t digit_sum(std::uint64_t l, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("digit_sum: p < 2");
    std::uint64_t s = 0;
    while (l) { s += l % p; l /= p; }
    return s;
}

std::int64_t legendre_val_factorial(std::uint64_t l, std::uint64_t p) {
    return static_cast<std::int64_t>((l - digit_sum(l, p)) / (p - 1));
}

std::vector<PrimePower> factorize(const Int& m, PrimeSieve& sieve) {
    if (m == 0) throw std::invalid_argument("factorize: zero");
    Int a = abs(m);
    std::vector<PrimePower> out;
    if (a == 1) return out;
    for (std::size_t i = 0;; ++i) {
        if (i >= sieve.primes().size()) {
            if (Int(sieve.limit()) * sieve.limit() > a) break;
            sieve.extend(sieve.limit() * 2);
        }
        std::uint64_t p = sieve.primes()[i];
        if (Int(p) * p > a) break;
        if (a % p == 0) {
            std::uint32_t e = 0;
            while (a % p == 0) { a /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (a > 1) {
        // remaining cofactor is prime (all divisors up to sqrt removed)
        if (a > std::numeric_limits<std::uint64_t>::max())
            throw std::runtime_error("factorize: cofactor exceeds 64-bit range");
        out.push_back({static_cast<std::uint64_t>(a), 1});
    }
    return out;
}

std::vector<Int> divisors(const std::vector<PrimePower>& fac, std::size_t max_count) {
    std::size_t count = 1;
    for (const auto& pp : fac) {
        count *= pp.e + 1;
        if (count > max_count) throw std::runtime_error("divisors: count exceeds budget");
    }
    std::vector<Int> out{1};
    out.reserve(count);
    for (const auto& pp : fac) {
        std::size_t sz = out.size();
        Int pe = 1;
        for (std::uint32_t e = 1; e <= pp.e; ++e) {
            pe *= pp.p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t largest_prime_factor(const Int& m, PrimeSieve& sieve) {
    if (m < 1) throw std::invalid_argument("largest_prime_factor: m < 1");
    if (m == 1) return 1;   // P(1) = 1 keeps smoothness predicates total
    auto fac = factorize(m, sieve);
    return fac.back().p;
}

std::vector<std::uint64_t> primes_in_ap_interval(const Rat& x, const Rat& ratio,
                                                 std::uint64_t r, std::uint64_t q,
                                                 PrimeSieve& sieve) {
    if (x <= 0 || ratio <= 1) throw std::invalid_argument("primes_in_ap_interval: bad range");
    if (std::gcd(r, q) != 1) throw std::invalid_argument("primes_in_ap_interval: gcd(r,q) != 1");
    Rat hi = ratio * x;
    Int hi_floor = numerator(hi) / denominator(hi);
    std::uint64_t hi64 = static_cast<std::uint64_t>(hi_floor);
    sieve.extend(std::max<std::uint64_t>(hi64, 4));
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : sieve.primes()) {
        if (Rat(p) <= x) continue;
        if (Rat(p) > hi) break;
        if (p % q == r % q) out.push_back(p);
    }
    return out;
}

std::uint64_t max_gap_in_residue_class(std::uint64_t limit, std::uint64_t r,
                                       std::uint64_t q, PrimeSieve& sieve) {
    sieve.extend(limit);
    std::uint64_t prev = 0, gap = 0, seen = 0;
    for (std::uint64_t p : sieve.primes()) {
        if (p > limit) break;
        if (p % q != r % q) continue;
        if (seen) gap = std::max(gap, p - prev);
        prev = p;
        ++seen;
    }
    if (seen < 2) throw std::invalid_argument("max_gap_in_residue_class: fewer than two primes");
    return gap;
}

} // namespace lagsieve
