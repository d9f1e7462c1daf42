#pragma once

#include "lagsieve/polygon.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lagsieve {

// A checkable certificate for one prime-divisibility criterion. The
// certificate is valid iff every named condition re-validates.
struct ExclusionCertificate {
    LemmaTag lemma_tag;
    std::uint64_t n = 0;
    AlphaParam alpha;
    std::int64_t k = 0;
    std::uint64_t prime_witness = 0;
    std::vector<std::pair<std::string, bool>> checked_conditions;
    // Lemma 4.1 only: the odd-n, k = (n-1)/2 extension to degree n applies.
    bool covers_degree_2k_plus_1 = false;

    bool valid() const {
        for (const auto& [name, ok] : checked_conditions)
            if (!ok) return false;
        return true;
    }
};

// Static exception data from the source results. Pairs are stored exactly
// as published; the campaign only reads them.
struct ExceptionTables {
    // (n, alpha): integer-alpha pairs where psi may have a linear factor,
    // plus (16,24) which may also have a quadratic one.
    std::set<std::pair<std::uint64_t, std::int64_t>> omega;
    // (u, n): half-alpha pairs where psi(x^2) may have a quadratic factor.
    std::set<std::pair<std::int64_t, std::uint64_t>> omega1;
    // (u, n): half-alpha pairs surviving the degree-1/2 polygon screen.
    std::set<std::pair<std::int64_t, std::uint64_t>> t0;
    // (n, alpha, k): triples with k >= 2 surviving the generalized-Schur
    // screen, and the sub-list left after the criteria of this artifact.
    std::set<std::tuple<std::uint64_t, std::int64_t, std::int64_t>> t1;
    // (u, n) lists for the degree >= 3 screen of psi(x^2): possible degree-3
    // factors, degree-4 factors (s_lemma25), degree-6 factors.
    std::set<std::pair<std::int64_t, std::uint64_t>> deg3_pairs;
    std::set<std::pair<std::int64_t, std::uint64_t>> s_lemma25;
    std::set<std::pair<std::int64_t, std::uint64_t>> deg6_pairs;

    static const ExceptionTables& instance();

    // Membership in T for k >= 2 (the k = 2 portion is predicate-based).
    // For k = 2 with alpha > 40 the screen is not applicable and the
    // criteria cascade must decide, so this returns true there.
    static bool in_t(std::uint64_t n, std::int64_t alpha, std::int64_t k);
};

// Lemma 3.1: smallest prime p >= k+2 with
//   p | prod (n-k+i)(alpha+n-k+i),  p does not divide prod (alpha+i),
// and p >= min(2u0, k+u0) (u0 = alpha/k exact) or p > 2k with p^2-p >= alpha.
std::optional<ExclusionCertificate> glemma_check(std::uint64_t n, std::int64_t alpha,
                                                 std::int64_t k, PrimeSieve& sieve);

// Lemma 3.2 (k in {1,2}, 0 < alpha <= 50): smallest prime p >= 2k+1 dividing
// prod (n-k+i) with nu_p((alpha+1)..(alpha+j)) <= nu_p(n..(n-j+1)) for
// j <= k. The exceptional configuration k=1, p=3, alpha in {24,25},
// nu_3(n)=1 never certifies.
std::optional<ExclusionCertificate> glemma1_check(std::uint64_t n, std::int64_t alpha,
                                                  std::int64_t k, PrimeSieve& sieve);

// Lemma 4.1: smallest prime p > max(2k, 1+sqrt(2(u+1))) dividing
// prod_{l=0}^{k-1} (1+2u+2(n-l))(n-l) but not prod_{l=1}^{k} (1+2u+2l);
// excludes factor degrees {2k-1, 2k} of psi_n(x^2) (and degree n = 2k+1
// when n is odd and k = (n-1)/2).
std::optional<ExclusionCertificate> half_irred_check(std::int64_t u, std::uint64_t n,
                                                     std::int64_t k, PrimeSieve& sieve);

// Lemma 5.1 conditions (i)-(iv) for script-L_n^{(u)} at prime p in the
// window (n/2, n-2).
bool hajir_check(std::uint64_t n, std::int64_t u, std::uint64_t p);

// Lemma 5.3: smallest prime n/2 < p < n-2 with p exactly dividing
// prod_{l=n-p+1}^{p} (1+2(u+l)).
std::optional<std::uint64_t> lemma_pr_prime_search(std::int64_t u, std::uint64_t n,
                                                   PrimeSieve& sieve);

// Lemma 5.4 inequality 3*P2 - P1 > 2n with P1 the least prime > 2n/3 and
// P2 the largest prime <= n-3. Throws when the interval (2n/3, n-2) holds
// no prime.
bool galois_large_n_check(std::uint64_t n, PrimeSieve& sieve);

// All (u, n) in 1 <= u <= min(u_max, max(45, floor(4n/3))), 1 <= n <= n_max
// whose b of the discriminant decomposition is a rational square.
std::vector<std::pair<std::int64_t, std::uint64_t>> bsq_scan(std::int64_t u_max,
                                                             std::uint64_t n_max,
                                                             PrimeSieve& sieve);

} // namespace lagsieve
