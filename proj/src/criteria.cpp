#include "lagsieve/criteria.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lagsieve {

namespace {

std::vector<std::uint64_t> prime_divisors(const Int& m, PrimeSieve& sieve) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(m, sieve)) out.push_back(pp.p);
    return out;
}

} // namespace

const ExceptionTables& ExceptionTables::instance() {
    static const ExceptionTables t = [] {
        ExceptionTables e;
        // Omega: Table 1 pairs (n, alpha)
        e.omega = {{2,14},{2,23},{2,34},{2,47},{4,14},{4,20},{4,23},{6,44},{8,41},
                   {12,24},{16,16},{16,20},{16,24},{16,29},{24,24},{30,24},{32,32},
                   {32,48},{40,24},{48,24},{112,48},{120,24}};
        // Omega_1: Table 2 pairs (u, n), n = 2^r written out
        e.omega1 = {{2,2},{2,8},{2,512},{6,16},{9,4},{9,64},{10,3},{10,12},{10,24},
                    {10,192},{16,8},{21,16},{24,16},{30,64},{35,32},{35,512},{37,12},
                    {37,36},{37,144},{44,4096}};
        // T_0: degree-1/2 screen survivors for psi(x^2)
        e.t0 = {{2,2},{2,8},{2,512},{6,16},{9,4},{9,64},{10,3},{10,12},{10,24},
                {10,192},{11,2},{16,8},{21,16},{24,16},{30,64},{35,2},{35,32},
                {35,512},{36,64},{37,12},{37,36},{37,144},{38,2},{44,4096}};
        // T_1 (n, alpha, k): triples left after the prime criteria
        e.t1 = {{8,13,2},{6,19,2},{9,19,2},{8,20,2},{4,21,2},{12,21,2},{24,22,2},
                {16,24,2},{9,27,2},{18,33,2},{16,34,2},{9,40,2},{27,38,2},
                {14,12,3},{16,12,4}};
        // degree >= 3 screens for psi(x^2), (u, n)
        e.deg3_pairs = {{1,12},{6,7},{9,113},{10,3},{21,101}};
        e.s_lemma25 = {{1,121},{8,59},{8,114},{9,4},{9,113},{9,163},{9,554},{15,23},
                       {15,107},{16,106},{20,102},{21,101},{26,155},{26,287},{30,92},
                       {36,86},{43,1158},{44,716}};
        e.deg6_pairs = {{44,79}};
        return e;
    }();
    return t;
}

bool ExceptionTables::in_t(std::uint64_t n, std::int64_t alpha, std::int64_t k) {
    if (k == 2) {
        if (alpha > 40) return true;   // screen proven only for alpha <= 40 at k = 2
        if (n + static_cast<std::uint64_t>(alpha) <= 100) return true;
        std::uint64_t na = n + static_cast<std::uint64_t>(alpha);
        if ((alpha == 13 || alpha == 14 || alpha == 19 || alpha == 33) &&
            (na == 126 || na == 225 || na == 2401 || na == 4375))
            return true;
        if ((n == 112 && alpha == 9) || (n == 233 && alpha == 10) || (n == 234 && alpha == 9))
            return true;
        static const std::map<std::int64_t, std::set<std::uint64_t>> table = {
            {12, {169, 729}},  {15, {289}},          {16, {289}},
            {17, {513}},       {18, {361, 513, 1216}}, {19, {243}},
            {20, {243}},       {21, {529, 121, 576}}, {22, {121, 576}},
            {24, {325, 625, 676}}, {27, {784}},       {28, {145}},
            {29, {961}},       {31, {243}},          {32, {243, 289, 1089}},
            {33, {136, 256, 289, 5832}}, {36, {1369}},
            {38, {325, 625, 676}}, {39, {1025, 6561}}, {40, {288}},
        };
        auto it = table.find(alpha);
        return it != table.end() && it->second.count(na);
    }
    if (k == 3) {
        static const std::set<std::pair<std::uint64_t, std::int64_t>> t3 = {
            {7,3},{8,2},{12,4},{46,4},{14,12},{17,11},{53,12}};
        return t3.count({n, alpha});
    }
    if (k == 4) {
        static const std::set<std::pair<std::uint64_t, std::int64_t>> t4 = {
            {18,9},{18,10},{56,10},{16,12},{17,11},{38,13},{39,18}};
        return t4.count({n, alpha});
    }
    if (k == 5) {
        static const std::set<std::pair<std::uint64_t, std::int64_t>> t5 = {
            {17,11},{19,9},{40,12}};
        return t5.count({n, alpha});
    }
    return false;   // no exceptions with k >= 6
}

std::optional<ExclusionCertificate> glemma_check(std::uint64_t n, std::int64_t alpha,
                                                 std::int64_t k, PrimeSieve& sieve) {
    if (alpha <= 0 || k < 1 || static_cast<std::uint64_t>(2 * k) > n)
        throw std::invalid_argument("glemma_check: need alpha > 0 and 1 <= k <= n/2");
    Int prod_cond = 1, prod_avoid = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        prod_cond *= Int(n - k + i) * (alpha + static_cast<std::int64_t>(n) - k + i);
        prod_avoid *= alpha + i;
    }
    Rat u0(alpha, k);
    for (std::uint64_t p : prime_divisors(prod_cond, sieve)) {
        if (p < static_cast<std::uint64_t>(k) + 2) continue;
        if (prod_avoid % p == 0) continue;
        bool c33 = Rat(p) >= std::min(2 * u0, Rat(k) + u0);
        bool c34 = (p > static_cast<std::uint64_t>(2 * k)) &&
                   (Int(p) * p - p >= alpha);
        if (!c33 && !c34) continue;
        ExclusionCertificate cert;
        cert.lemma_tag = LemmaTag::GLemma;
        cert.n = n;
        cert.alpha = AlphaParam::integer(alpha);
        cert.k = k;
        cert.prime_witness = p;
        cert.checked_conditions = {
            {"p >= k+2", p >= static_cast<std::uint64_t>(k) + 2},
            {"p | prod (n-k+i)(alpha+n-k+i)", prod_cond % p == 0},
            {"p does not divide prod (alpha+i)", prod_avoid % p != 0},
            {"p >= min(2u0, k+u0) or (p > 2k and p^2-p >= alpha)", c33 || c34},
        };
        return cert;
    }
    return std::nullopt;
}

std::optional<ExclusionCertificate> glemma1_check(std::uint64_t n, std::int64_t alpha,
                                                  std::int64_t k, PrimeSieve& sieve) {
    if (k != 1 && k != 2) throw std::invalid_argument("glemma1_check: k must be 1 or 2");
    if (alpha <= 0 || alpha > 50)
        throw std::invalid_argument("glemma1_check: requires 0 < alpha <= 50");
    Int prod = 1;
    for (std::int64_t i = 1; i <= k; ++i) prod *= n - k + i;
    for (std::uint64_t p : prime_divisors(prod, sieve)) {
        if (p < static_cast<std::uint64_t>(2 * k + 1)) continue;
        bool vals_ok = true;
        std::int64_t va = 0, vn = 0;
        for (std::int64_t j = 1; j <= k && vals_ok; ++j) {
            va += val_p(Int(alpha + j), p);
            vn += val_p(Int(n) - (j - 1), p);
            if (va > vn) vals_ok = false;
        }
        if (!vals_ok) continue;
        bool exceptional = (k == 1 && p == 3 && (alpha == 24 || alpha == 25) &&
                            val_p(Int(n), 3) == 1);
        if (exceptional) continue;
        ExclusionCertificate cert;
        cert.lemma_tag = LemmaTag::GLemma1;
        cert.n = n;
        cert.alpha = AlphaParam::integer(alpha);
        cert.k = k;
        cert.prime_witness = p;
        cert.checked_conditions = {
            {"p >= 2k+1", p >= static_cast<std::uint64_t>(2 * k + 1)},
            {"p | prod (n-k+i)", prod % p == 0},
            {"nu_p((alpha+1)..(alpha+j)) <= nu_p(n..(n-j+1)) for j <= k", vals_ok},
            {"not the exceptional k=1,p=3,alpha in {24,25},nu_3(n)=1 case", !exceptional},
        };
        return cert;
    }
    return std::nullopt;
}

std::optional<ExclusionCertificate> half_irred_check(std::int64_t u, std::uint64_t n,
                                                     std::int64_t k, PrimeSieve& sieve) {
    if (k < 1) throw std::invalid_argument("half_irred_check: k >= 1 required");
    Int prod_cond = 1, prod_avoid = 1;
    for (std::int64_t l = 0; l <= k - 1; ++l)
        prod_cond *= Int(1 + 2 * u + 2 * (static_cast<std::int64_t>(n) - l)) *
                     (static_cast<std::int64_t>(n) - l);
    for (std::int64_t l = 1; l <= k; ++l) prod_avoid *= 1 + 2 * u + 2 * l;
    for (std::uint64_t p : prime_divisors(prod_cond, sieve)) {
        if (p <= static_cast<std::uint64_t>(2 * k)) continue;
        // p > 1 + sqrt(2(u+1))  <=>  (p-1)^2 > 2(u+1)
        if (Int(p - 1) * (p - 1) <= 2 * (u + 1)) continue;
        if (prod_avoid % p == 0) continue;
        ExclusionCertificate cert;
        cert.lemma_tag = LemmaTag::HalfIrred;
        cert.n = n;
        cert.alpha = AlphaParam::half(u);
        cert.k = k;
        cert.prime_witness = p;
        cert.covers_degree_2k_plus_1 =
            (n % 2 == 1) && (k == static_cast<std::int64_t>((n - 1) / 2));
        cert.checked_conditions = {
            {"p | prod (1+2u+2(n-l))(n-l)", prod_cond % p == 0},
            {"p does not divide prod (1+2u+2l)", prod_avoid % p != 0},
            {"p > 2k", p > static_cast<std::uint64_t>(2 * k)},
            {"p > 1+sqrt(2(u+1))", Int(p - 1) * (p - 1) > 2 * (u + 1)},
        };
        return cert;
    }
    return std::nullopt;
}

bool hajir_check(std::uint64_t n, std::int64_t u, std::uint64_t p) {
    if (n < 5) throw std::invalid_argument("hajir_check: window empty for n < 5");
    if (!(2 * p > n && p + 2 < n)) return false;   // n/2 < p < n-2
    // c_j = prod_{i=j+1}^{n} (1+2(u+i)); ord_p(c_j) is a suffix sum of the
    // per-term valuations.
    std::vector<std::int64_t> suffix(n + 2, 0);
    for (std::uint64_t i = n; i >= 1; --i) {
        Int t = 1 + 2 * (Int(u) + i);
        suffix[i] = suffix[i + 1] + ((t % p == 0) ? val_p(t, p) : 0);
    }
    auto ord_c = [&](std::uint64_t j) { return suffix[j + 1]; };
    if (ord_c(0) != 1) return false;
    for (std::uint64_t j = 0; j + p <= n; ++j)
        if (ord_c(j) < 1) return false;
    if (ord_c(p) != 0) return false;
    return true;
}

std::optional<std::uint64_t> lemma_pr_prime_search(std::int64_t u, std::uint64_t n,
                                                   PrimeSieve& sieve) {
    if (n <= 1) throw std::invalid_argument("lemma_pr_prime_search: n > 1 required");
    sieve.extend(n + 2);
    for (std::uint64_t p : sieve.primes()) {
        if (2 * p <= n) continue;
        if (p + 2 >= n) break;
        std::int64_t total = 0;
        for (std::uint64_t l = n - p + 1; l <= p && total <= 1; ++l) {
            Int t = 1 + 2 * (Int(u) + l);
            if (t % p == 0) total += val_p(t, p);
        }
        if (total == 1) return p;
    }
    return std::nullopt;
}

bool galois_large_n_check(std::uint64_t n, PrimeSieve& sieve) {
    if (n < 8) throw std::invalid_argument("galois_large_n_check: interval empty");
    sieve.extend(n + 2);
    std::uint64_t p1 = sieve.next_prime((2 * n) / 3);
    auto p2 = sieve.prev_prime(n - 3);
    if (!p2 || p1 > *p2) throw std::invalid_argument("galois_large_n_check: no prime in (2n/3, n-2)");
    return 3 * *p2 > 2 * n + p1;
}

std::vector<std::pair<std::int64_t, std::uint64_t>> bsq_scan(std::int64_t u_max,
                                                             std::uint64_t n_max,
                                                             PrimeSieve& sieve) {
    if (u_max < 1 || n_max < 1) throw std::invalid_argument("bsq_scan: bounds >= 1");
    std::vector<std::pair<std::int64_t, std::uint64_t>> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::int64_t ucap = std::min<std::int64_t>(
            u_max, std::max<std::int64_t>(45, (4 * static_cast<std::int64_t>(n)) / 3));
        for (std::int64_t u = 1; u <= ucap; ++u)
            if (square_class_b(n, u, sieve).is_trivial()) out.push_back({u, n});
    }
    return out;
}

} // namespace lagsieve
