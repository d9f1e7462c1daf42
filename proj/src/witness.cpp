#include "lagsieve/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagsieve {

namespace {

// symmetric residue of a mod m (m > 0), in (-m/2, m/2]
Int symmetric_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// extended gcd: returns g and x with a*x ≡ g (mod m) pieces handled by caller
Int mod_inverse(const Int& a, const Int& m) {
    Int t0 = 0, t1 = 1, r0 = m, r1 = ((a % m) + m) % m;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int t = t0 - q * t1;
        t0 = t1; t1 = t;
        t = r0 - q * r1;
        r0 = r1; r1 = t;
    }
    if (r0 != 1) throw std::logic_error("mod_inverse: not invertible");
    return ((t0 % m) + m) % m;
}

} // namespace

IntPoly FactorWitness::target_polynomial() const {
    IntPoly psi = build_psi(n, alpha, coeffs);
    return squared_model ? psi.substitute_square() : psi;
}

bool FactorWitness::revalidate() const {
    if (coeffs.size() != n + 1) return false;
    if (abs(coeffs.front()) != 1 || abs(coeffs.back()) != 1) return false;
    return target_polynomial().divisible_by(factor);
}

bool LinearSystemInstance::solvable() const {
    Int g = 0;
    for (const auto& t : free_terms) g = gcd(g, t);
    if (g == 0) return fixed == 0;
    return fixed % g == 0;
}

std::optional<std::vector<Int>> LinearSystemInstance::solve() const {
    std::size_t m = free_terms.size();
    std::vector<Int> prefix_gcd(m + 1, 0);   // gcd of terms[0..i)
    for (std::size_t i = 0; i < m; ++i) prefix_gcd[i + 1] = gcd(prefix_gcd[i], free_terms[i]);
    if (prefix_gcd[m] == 0) {
        if (fixed != 0) return std::nullopt;
        return std::vector<Int>(m, 0);
    }
    if (fixed % prefix_gcd[m] != 0) return std::nullopt;
    // back-substitute from the last term: pick a_i so the remainder stays
    // divisible by the prefix gcd, choosing the symmetric residue
    std::vector<Int> a(m, 0);
    Int rem = fixed;
    for (std::size_t i = m; i-- > 0;) {
        const Int& gpre = prefix_gcd[i];
        const Int& t = free_terms[i];
        if (t == 0) continue;
        if (gpre == 0) {
            a[i] = rem / t;
            rem = 0;
            break;
        }
        Int tg = ((t % gpre) + gpre) % gpre;
        Int d = gcd(tg, gpre);
        Int md = gpre / d;
        if (md == 1) {
            a[i] = 0;
        } else {
            Int inv = mod_inverse(tg / d, md);
            a[i] = symmetric_mod((rem / d) % md * inv, md);
        }
        rem -= a[i] * t;
    }
    if (rem != 0) throw std::logic_error("LinearSystemInstance: back-substitution failed");
    return a;
}

WitnessResult linear_witness(std::uint64_t n, const AlphaParam& alpha, const Int& b,
                             int sign_a0, int sign_an) {
    if (b == 0) throw std::invalid_argument("linear_witness: b = 0");
    if (sign_a0 * sign_a0 != 1 || sign_an * sign_an != 1)
        throw std::invalid_argument("linear_witness: signs must be +-1");
    auto B = coefficient_scale(n, alpha);
    LinearSystemInstance sys;
    Int mb_pow = 1;   // (-b)^j
    std::vector<Int> pw(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j) {
        pw[j] = mb_pow;
        mb_pow *= -b;
    }
    sys.fixed = -(Int(sign_a0) * B[0] + Int(sign_an) * B[n] * pw[n]);
    for (std::uint64_t j = 1; j < n; ++j) sys.free_terms.push_back(B[j] * pw[j]);
    auto sol = sys.solve();
    if (!sol) return {WitnessStatus::NotSolvable, std::nullopt};
    FactorWitness w;
    w.n = n;
    w.alpha = alpha;
    w.coeffs.resize(n + 1);
    w.coeffs[0] = sign_a0;
    w.coeffs[n] = sign_an;
    for (std::uint64_t j = 1; j < n; ++j) w.coeffs[j] = (*sol)[j - 1];
    w.factor = IntPoly({b, 1});
    w.squared_model = false;
    w.verified = w.revalidate();
    if (!w.verified) throw std::logic_error("linear_witness: verification failed");
    return {WitnessStatus::Found, std::move(w)};
}

WitnessResult quadratic_witness(std::uint64_t n, const AlphaParam& alpha, const Int& q0) {
    if (q0 == 0) throw std::invalid_argument("quadratic_witness: q0 = 0");
    constexpr std::uint64_t kScopeLimit = 1024;
    if (n > kScopeLimit) return {WitnessStatus::ScopeExceeded, std::nullopt};

    if (alpha.is_half()) {
        // x^2 + q0 divides psi(x^2) iff -q0 is a root of the y-model
        for (int s0 : {1, -1})
            for (int sn : {1, -1}) {
                auto r = linear_witness(n, alpha, q0, s0, sn);
                if (r.status == WitnessStatus::Found) {
                    FactorWitness w = std::move(*r.witness);
                    w.squared_model = true;
                    w.factor = IntPoly({q0, Int(0), Int(1)});
                    w.verified = w.revalidate();
                    if (!w.verified) throw std::logic_error("quadratic_witness: lift failed");
                    return {WitnessStatus::Found, std::move(w)};
                }
            }
        return {WitnessStatus::NotSolvable, std::nullopt};
    }

    // Integer alpha: remainder of psi mod (x^2 + q0) has decoupled even and
    // odd parts; the odd part is homogeneous in free coefficients (zeros
    // solve it), the even part is one gcd condition.
    auto B = coefficient_scale(n, alpha);
    std::vector<Int> pw(n / 2 + 1);   // (-q0)^t
    pw[0] = 1;
    for (std::size_t t = 1; t < pw.size(); ++t) pw[t] = pw[t - 1] * -q0;
    for (int s0 : {1, -1})
        for (int sn : {1, -1}) {
            LinearSystemInstance even;
            even.fixed = -(Int(s0) * B[0]);
            if (n % 2 == 0) even.fixed -= Int(sn) * B[n] * pw[n / 2];
            std::vector<std::uint64_t> even_free;
            for (std::uint64_t j = 2; j < n; j += 2) {
                even.free_terms.push_back(B[j] * pw[j / 2]);
                even_free.push_back(j);
            }
            auto sol = even.solve();
            if (!sol) continue;
            FactorWitness w;
            w.n = n;
            w.alpha = alpha;
            w.coeffs.assign(n + 1, Int(0));
            w.coeffs[0] = s0;
            w.coeffs[n] = sn;
            for (std::size_t t = 0; t < even_free.size(); ++t) w.coeffs[even_free[t]] = (*sol)[t];
            if (n % 2 == 1) {
                // odd part: sum over odd j of a_j B_j (-q0)^((j-1)/2) = 0 with
                // a_n fixed; solve it as its own system
                LinearSystemInstance odd;
                odd.fixed = -(Int(sn) * B[n] * pw[(n - 1) / 2]);
                std::vector<std::uint64_t> odd_free;
                for (std::uint64_t j = 1; j < n; j += 2) {
                    odd.free_terms.push_back(B[j] * pw[(j - 1) / 2]);
                    odd_free.push_back(j);
                }
                auto osol = odd.solve();
                if (!osol) continue;
                for (std::size_t t = 0; t < odd_free.size(); ++t) w.coeffs[odd_free[t]] = (*osol)[t];
            }
            w.factor = IntPoly({q0, Int(0), Int(1)});
            w.squared_model = false;
            w.verified = w.revalidate();
            if (!w.verified) throw std::logic_error("quadratic_witness: verification failed");
            return {WitnessStatus::Found, std::move(w)};
        }
    return {WitnessStatus::NotSolvable, std::nullopt};
}

FactorWitness mirror_witness(const FactorWitness& w) {
    if (!w.verified) throw std::invalid_argument("mirror_witness: unverified input");
    FactorWitness out = w;
    for (std::uint64_t j = 0; j <= w.n; ++j)
        if ((w.n - j) % 2) out.coeffs[j] = -out.coeffs[j];
    if (w.factor.degree() == 1) {
        // x + b  ->  x - b
        out.factor = IntPoly({-w.factor[0], Int(1)});
    } else if (w.factor.degree() == 2 && w.factor[1] == 0 && w.squared_model) {
        // x^2 + q0 of psi(x^2) is the root -q0 of the y-model, and the twist
        // mirrors that root: x^2 - q0 divides the twisted psi(x^2)
        out.factor = IntPoly({-w.factor[0], Int(0), Int(1)});
    } else {
        // an even factor of psi(x) itself is invariant under x -> -x, so the
        // twist keeps x^2 + q0 rather than flipping its sign
        throw std::invalid_argument("mirror_witness: only linear and squared-model factors");
    }
    out.verified = out.revalidate();
    if (!out.verified) throw std::logic_error("mirror_witness: verification failed");
    return out;
}

std::vector<Int> rational_roots(const IntPoly& p, PrimeSieve& sieve) {
    if (p.is_zero() || p.constant_term() == 0)
        throw std::invalid_argument("rational_roots: zero constant term");
    std::vector<Int> out;
    for (const Int& d : divisors(factorize(p.constant_term(), sieve)))
        for (const Int& r : {d, -d})
            if (p.eval(r) == 0) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_even_poly(const IntPoly& p) {
    for (std::int64_t j = 1; j <= p.degree(); j += 2)
        if (p[static_cast<std::size_t>(j)] != 0) return false;
    return true;
}

IntPoly even_part(const IntPoly& p) {
    std::vector<Int> c;
    for (std::int64_t j = 0; j <= p.degree(); j += 2) c.push_back(p[static_cast<std::size_t>(j)]);
    return IntPoly(std::move(c));
}

Int cauchy_bound(const IntPoly& p) {
    // 1 + max |c_i| / |lead|, rounded up
    Int lead = abs(p.leading());
    Int mx = 0;
    for (std::int64_t j = 0; j < p.degree(); ++j)
        mx = std::max(mx, abs(p[static_cast<std::size_t>(j)]));
    return 1 + (mx + lead - 1) / lead;
}

} // namespace

std::vector<IntPoly> bounded_quadratic_factors(const IntPoly& p, PrimeSieve& sieve) {
    if (p.degree() < 2) return {};
    if (abs(p.leading()) != 1)
        throw std::invalid_argument("bounded_quadratic_factors: leading coefficient must be +-1");
    if (p.constant_term() == 0)
        throw std::invalid_argument("bounded_quadratic_factors: zero constant term");
    std::vector<IntPoly> out;
    auto push_checked = [&](const Int& c1, const Int& c0) {
        IntPoly q({c0, c1, Int(1)});
        if (p.divisible_by(q)) out.push_back(std::move(q));
    };
    auto divs = divisors(factorize(p.constant_term(), sieve));
    if (is_even_poly(p)) {
        // x^2 + c0 divides p = E(x^2) iff -c0 is a root of E; a factor with
        // c1 != 0 forces its x -> -x mirror alongside, so the constant term
        // would be the square c0^2
        IntPoly E = even_part(p);
        for (const Int& d : divs)
            for (const Int& c0 : {d, -d})
                if (E.eval(-c0) == 0) push_checked(0, c0);
        Int c = p.constant_term();
        Int root = sqrt(abs(c));
        if (root * root == abs(c)) {
            Int bound = 2 * cauchy_bound(p);
            for (const Int& c0 : {root, -root})
                for (Int c1 = 1; c1 <= bound; ++c1) {
                    push_checked(c1, c0);
                    push_checked(-c1, c0);
                }
        }
        return out;
    }
    Int bound = 2 * cauchy_bound(p);
    for (const Int& d : divs)
        for (const Int& c0 : {d, -d})
            for (Int c1 = -bound; c1 <= bound; ++c1) push_checked(c1, c0);
    return out;
}

namespace {

// Kronecker search for monic degree-k factors: interpolate candidates
// through divisor choices of p(t) at nodes t = 0..k.
void kronecker_degree(const IntPoly& p, std::int64_t k, PrimeSieve& sieve,
                      std::vector<IntPoly>& out) {
    std::vector<Int> nodes;
    std::vector<std::vector<Int>> choices;
    for (Int t = 0; static_cast<std::int64_t>(nodes.size()) <= k; ++t) {
        Int v = p.eval(t);
        if (v == 0) {
            // t is a root; x - t divides p, handled at degree 1. Shift node.
            continue;
        }
        nodes.push_back(t);
        std::vector<Int> opts;
        for (const Int& d : divisors(factorize(v, sieve))) {
            opts.push_back(d);
            opts.push_back(-d);
        }
        choices.push_back(std::move(opts));
    }
    // Lagrange interpolation through (nodes[i], value_i); keep integer
    // monic candidates of degree exactly k.
    std::vector<std::size_t> idx(nodes.size(), 0);
    for (;;) {
        std::vector<Rat> cand(k + 1, Rat(0));
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            // basis_i(x) = prod_{j != i} (x - t_j) / (t_i - t_j)
            std::vector<Rat> basis{Rat(1)};
            Rat denom = 1;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                if (j == i) continue;
                basis.push_back(Rat(0));
                for (std::size_t d = basis.size() - 1; d > 0; --d)
                    basis[d] = basis[d - 1] - Rat(nodes[j]) * basis[d];
                basis[0] = -Rat(nodes[j]) * basis[0];
                denom *= Rat(nodes[i]) - Rat(nodes[j]);
            }
            Rat scale = Rat(choices[i][idx[i]]) / denom;
            for (std::size_t d = 0; d < basis.size(); ++d) cand[d] += scale * basis[d];
        }
        bool integral = true;
        std::vector<Int> c(k + 1);
        for (std::int64_t d = 0; d <= k; ++d) {
            if (denominator(cand[static_cast<std::size_t>(d)]) != 1) { integral = false; break; }
            c[static_cast<std::size_t>(d)] = numerator(cand[static_cast<std::size_t>(d)]);
        }
        if (integral && c[static_cast<std::size_t>(k)] == 1) {
            IntPoly q(std::move(c));
            if (q.degree() == k && p.divisible_by(q) &&
                std::find(out.begin(), out.end(), q) == out.end())
                out.push_back(std::move(q));
        }
        std::size_t t = 0;
        for (; t < idx.size(); ++t) {
            if (++idx[t] < choices[t].size()) break;
            idx[t] = 0;
        }
        if (t == idx.size()) break;
    }
}

} // namespace

std::map<std::int64_t, std::vector<IntPoly>> brute_force_factor_oracle(const IntPoly& p,
                                                                       std::int64_t k_max,
                                                                       PrimeSieve& sieve) {
    if (p.is_zero()) throw std::invalid_argument("factor oracle: zero polynomial");
    if (2 * k_max > p.degree())
        throw std::invalid_argument("factor oracle: k_max <= degree/2 required");
    if (k_max >= 3 && p.degree() > 12)
        throw std::invalid_argument("factor oracle: degree > 12 out of scope for k >= 3");
    std::map<std::int64_t, std::vector<IntPoly>> out;
    if (k_max >= 1) {
        std::vector<IntPoly> lin;
        for (const Int& r : rational_roots(p, sieve)) lin.push_back(IntPoly({-r, Int(1)}));
        if (!lin.empty()) out[1] = std::move(lin);
    }
    if (k_max >= 2) {
        auto quads = bounded_quadratic_factors(p, sieve);
        if (!quads.empty()) out[2] = std::move(quads);
    }
    for (std::int64_t k = 3; k <= k_max; ++k) {
        std::vector<IntPoly> fs;
        kronecker_degree(p, k, sieve, fs);
        if (!fs.empty()) out[k] = std::move(fs);
    }
    return out;
}

} // namespace lagsieve
