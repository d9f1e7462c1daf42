#include "lagsieve/campaign.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lagsieve {

namespace {

// Candidate primes for the Filaseta/Dumas steps: divisors of the top two
// coefficient scales (a prime must divide b_{m-1} already, so nothing else
// can qualify).
std::vector<std::uint64_t> polygon_candidate_primes(std::uint64_t n, const AlphaParam& alpha,
                                                    PrimeSieve& sieve) {
    Int prod = Int(n) * alpha.term(n);
    if (n > 1) prod *= Int(n) * (n - 1) / 2 * alpha.term(n - 1);
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(prod, sieve)) out.push_back(pp.p);
    return out;
}

std::string tag_with_prime(LemmaTag tag, std::uint64_t p) {
    std::ostringstream os;
    os << lemma_tag_name(tag) << " p=" << p;
    return os.str();
}

} // namespace

LinearFactorDecision decide_linear_factor(std::uint64_t n, const AlphaParam& alpha,
                                          PrimeSieve& sieve) {
    LinearFactorDecision dec;
    Int B0 = coefficient_scale(n, alpha)[0];
    // per-prime admissible exponents; any empty set kills every candidate
    std::vector<std::pair<std::uint64_t, std::vector<std::int64_t>>> constrained;
    for (const auto& pp : factorize(B0, sieve)) {
        auto allowed = monic_linear_constraint(n, alpha, pp.p);
        if (allowed.empty()) return dec;   // no admissible b at all
        if (allowed.size() == 1 && allowed[0] == 0) continue;
        constrained.push_back({pp.p, std::move(allowed)});
    }
    std::vector<Int> candidates{1};
    constexpr std::size_t kCandidateCap = 1u << 20;
    for (const auto& [p, allowed] : constrained) {
        std::vector<Int> next;
        next.reserve(candidates.size() * allowed.size());
        for (const Int& c : candidates)
            for (std::int64_t e : allowed) next.push_back(c * int_pow(Int(p), e));
        candidates.swap(next);
        if (candidates.size() > kCandidateCap)
            throw std::runtime_error("decide_linear_factor: candidate explosion");
    }
    std::sort(candidates.begin(), candidates.end());
    auto B = coefficient_scale(n, alpha);
    for (const Int& c : candidates) {
        for (const Int& b : {c, -c}) {
            LinearSystemInstance sys;
            Int pw = 1;
            for (std::uint64_t j = 1; j < n; ++j) {
                pw *= -b;
                sys.free_terms.push_back(B[j] * pw);
            }
            pw *= -b;
            Int lead_term = B[n] * pw;   // B_n (-b)^n
            Int g = 0;
            for (const auto& t : sys.free_terms) g = gcd(g, t);
            for (int s0 : {1, -1}) {
                for (int sn : {1, -1}) {
                    ++dec.candidates_tested;
                    Int fixed = -(Int(s0) * B[0] + Int(sn) * lead_term);
                    bool ok = (g == 0) ? fixed == 0 : fixed % g == 0;
                    if (ok) {
                        dec.has_factor = true;
                        dec.witness_b = b;
                        dec.sign_a0 = s0;
                        dec.sign_an = sn;
                        return dec;
                    }
                }
            }
        }
    }
    return dec;
}

nlohmann::json SweepReport::to_json(bool include_verdicts) const {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["theorem"] = theorem_tag;
    j["domain"] = domain;
    j["flagged_count"] = flagged_count;
    j["mismatches"] = mismatches;
    nlohmann::json flagged = nlohmann::json::array();
    for (const auto& v : verdicts) {
        if (!v.flagged && !include_verdicts) continue;
        nlohmann::json jv;
        jv["n"] = v.n;
        jv["alpha_or_u"] = v.alpha_or_u;
        jv["flagged"] = v.flagged;
        jv["expected_exception"] = v.expected_exception;
        nlohmann::json degs = nlohmann::json::array();
        for (const auto& [k, tag] : v.degree_outcomes) degs.push_back({{"k", k}, {"by", tag}});
        jv["degrees"] = degs;
        flagged.push_back(jv);
    }
    j[include_verdicts ? "verdicts" : "flagged"] = flagged;
    return j;
}

SweepReport verify_theorem1(const Theorem1Options& opts, PrimeSieve& sieve) {
    SweepReport rep;
    rep.theorem_tag = "theorem1";
    rep.domain = {{"n", {2, opts.n_max}},
                  {"alpha", {opts.alpha_min, opts.alpha_max}},
                  {"k_cap", opts.k_cap}};
    const auto& omega = ExceptionTables::instance().omega;
    for (std::uint64_t n = 2; n <= opts.n_max; ++n) {
        for (std::int64_t alpha = opts.alpha_min; alpha <= opts.alpha_max; ++alpha) {
            PairVerdict v;
            v.n = n;
            v.alpha_or_u = alpha;
            AlphaParam ap = AlphaParam::integer(alpha);
            std::int64_t k_hi = std::min<std::int64_t>(opts.k_cap, static_cast<std::int64_t>(n / 2));
            for (std::int64_t k = 1; k <= k_hi; ++k) {
                std::string tag;
                if (k >= 2 && !ExceptionTables::in_t(n, alpha, k)) {
                    tag = "t_data";
                } else if (auto c = glemma_check(n, alpha, k, sieve)) {
                    tag = tag_with_prime(LemmaTag::GLemma, c->prime_witness);
                } else if (k <= 2) {
                    if (auto c1 = glemma1_check(n, alpha, k, sieve))
                        tag = tag_with_prime(LemmaTag::GLemma1, c1->prime_witness);
                }
                if (tag.empty())

                    for (std::uint64_t p : polygon_candidate_primes(n, ap, sieve)) {
                        auto fr = filaseta_exclusion(n, ap, p, 0, k);
                        if (fr.conclusive) {
                            tag = tag_with_prime(LemmaTag::Filaseta, p);
                            break;
                        }
                        if (k >= 2) {
                            auto fr1 = filaseta_exclusion(n, ap, p, k - 1, k);
                            if (fr1.conclusive) {
                                tag = tag_with_prime(LemmaTag::Filaseta, p);
                                break;
                            }
                        }
                    }
                if (tag.empty())
                    for (std::uint64_t p : polygon_candidate_primes(n, ap, sieve)) {
                        auto dr = dumas_exclusion_all_coeffs(n, ap, p, k);
                        if (dr.conclusive) {
                            tag = tag_with_prime(LemmaTag::Dumas, p);
                            break;
                        }
                    }
                if (tag.empty() && k == 1) {
                    auto dec = decide_linear_factor(n, ap, sieve);
                    if (!dec.has_factor)
                        tag = "witness_search (no admissible b)";
                    else
                        tag = "flagged: linear factor x+" + dec.witness_b.str();
                }
                if (tag.empty() || tag.rfind("flagged", 0) == 0) {
                    v.flagged = true;
                    v.degree_outcomes.push_back({k, tag.empty() ? "flagged: unresolved" : tag});
                } else {
                    v.degree_outcomes.push_back({k, tag});
                }
            }
            if (v.flagged) {
                v.expected_exception = omega.count({n, alpha}) > 0;
                ++rep.flagged_count;
                // expectations: Omega pairs may be flagged at k = 1 only,
                // except (16,24) which may also be flagged at k = 2
                for (const auto& [k, tag] : v.degree_outcomes) {
                    if (tag.rfind("flagged", 0) != 0) continue;
                    bool ok = v.expected_exception &&
                              (k == 1 || (k == 2 && n == 16 && alpha == 24));
                    if (!ok) {
                        std::ostringstream os;
                        os << "unexpected flag (n=" << n << ", alpha=" << alpha << ", k=" << k
                           << ")";
                        rep.mismatches.push_back(os.str());
                    }
                }
            } else if (omega.count({n, alpha})) {
                std::ostringstream os;
                os << "published exception not flagged (n=" << n << ", alpha=" << alpha << ")";
                rep.mismatches.push_back(os.str());
            }
            rep.verdicts.push_back(std::move(v));
        }
    }
    return rep;
}

namespace {

// Degree-1/2 exclusion of psi_n^{(u+1/2)}(x^2) via the squared-template
// polygon machinery.
std::string exclude_degree_squared(std::uint64_t n, const AlphaParam& ap, std::int64_t k,
                                   PrimeSieve& sieve) {
    for (std::uint64_t p : polygon_candidate_primes(n, ap, sieve)) {
        auto fr = filaseta_exclusion(n, ap, p, 0, k, /*squared=*/true);
        if (fr.conclusive) return tag_with_prime(LemmaTag::Filaseta, p);
        if (k >= 2) {
            auto fr1 = filaseta_exclusion(n, ap, p, k - 1, k, /*squared=*/true);
            if (fr1.conclusive) return tag_with_prime(LemmaTag::Filaseta, p);
        }
    }
    for (std::uint64_t p : polygon_candidate_primes(n, ap, sieve)) {
        DumasOptions d;
        d.squared = true;
        auto dr = dumas_exclusion_all_coeffs(n, ap, p, k, d);
        if (dr.conclusive) return tag_with_prime(LemmaTag::Dumas, p);
    }
    return {};
}

// The (u,n) = (38,2) resolution: x^4 + 162 a x^2 +- 6399 has no factor for
// any |a| <= bound, decided by the rational-root and quadratic-divisor
// oracles.
bool oracle_38_2_irreducible(const Int& bound, PrimeSieve& sieve) {
    for (Int a = -bound; a <= bound; ++a) {
        for (int sgn : {1, -1}) {
            IntPoly p({Int(sgn) * 6399, Int(0), 162 * a, Int(0), Int(1)});
            if (!rational_roots(p, sieve).empty()) return false;
            if (!bounded_quadratic_factors(p, sieve).empty()) return false;
        }
    }
    return true;
}

} // namespace

SweepReport verify_theorem2(const Theorem2Options& opts, PrimeSieve& sieve) {
    SweepReport rep;
    rep.theorem_tag = "theorem2";
    rep.domain = {{"n", {2, opts.n_max}},
                  {"u", {opts.u_min, opts.u_max}},
                  {"oracle_coeff_bound", opts.oracle_coeff_bound.str()}};
    const auto& tabs = ExceptionTables::instance();
    for (std::int64_t u = opts.u_min; u <= opts.u_max; ++u) {
        for (std::uint64_t n = 2; n <= opts.n_max; ++n) {
            PairVerdict v;
            v.n = n;
            v.alpha_or_u = u;
            AlphaParam ap = AlphaParam::half(u);
            // degrees 1 and 2
            if (!tabs.t0.count({u, n})) {
                v.degree_outcomes.push_back({1, "t_data"});
                v.degree_outcomes.push_back({2, "t_data"});
            } else if (u == 38 && n == 2) {
                bool irr = oracle_38_2_irreducible(opts.oracle_coeff_bound, sieve);
                v.degree_outcomes.push_back({1, irr ? "oracle sweep" : "flagged: oracle"});
                v.degree_outcomes.push_back({2, irr ? "oracle sweep" : "flagged: oracle"});
                if (!irr) v.flagged = true;
            } else {
                for (std::int64_t k : {1, 2}) {
                    std::string tag = exclude_degree_squared(n, ap, k, sieve);
                    if (tag.empty()) {
                        v.flagged = true;
                        v.degree_outcomes.push_back({k, "flagged: unresolved"});
                    } else {
                        v.degree_outcomes.push_back({k, tag});
                    }
                }
            }
            // degrees >= 3 via the published screens + Lemma 4.1
            auto run_screen = [&](const std::set<std::pair<std::int64_t, std::uint64_t>>& lst,
                                  std::int64_t k, std::int64_t shown_degree) {
                if (!lst.count({u, n})) return;
                auto cert = half_irred_check(u, n, k, sieve);
                if (cert) {
                    v.degree_outcomes.push_back(
                        {shown_degree, tag_with_prime(LemmaTag::HalfIrred, cert->prime_witness)});
                } else {
                    v.flagged = true;
                    v.degree_outcomes.push_back({shown_degree, "flagged: unresolved"});
                }
            };
            run_screen(tabs.deg3_pairs, 2, 3);
            run_screen(tabs.s_lemma25, 2, 4);
            run_screen(tabs.deg6_pairs, 3, 6);
            if (v.flagged) {
                v.expected_exception =
                    tabs.omega1.count({u, n}) > 0 || (u == 9 && n == 4);
                ++rep.flagged_count;
                if (!v.expected_exception) {
                    std::ostringstream os;
                    os << "unexpected flag (u=" << u << ", n=" << n << ")";
                    rep.mismatches.push_back(os.str());
                }
            } else if (tabs.omega1.count({u, n}) || (u == 9 && n == 4)) {
                std::ostringstream os;
                os << "published exception not flagged (u=" << u << ", n=" << n << ")";
                rep.mismatches.push_back(os.str());
            }
            rep.verdicts.push_back(std::move(v));
        }
    }
    return rep;
}

TablesReport verify_tables(PrimeSieve& sieve) {
    TablesReport rep;
    // Table 1: (n, alpha) -> b of the x +- b row
    static const std::vector<std::pair<std::pair<std::uint64_t, std::int64_t>, std::int64_t>>
        table1 = {{{16, 16}, 2},  {{32, 32}, 2},  {{2, 14}, 4},   {{2, 34}, 6},
                  {{4, 14}, 6},   {{4, 20}, 6},   {{4, 23}, 6},   {{12, 24}, 6},
                  {{16, 20}, 6},  {{24, 24}, 6},  {{48, 24}, 6},  {{32, 48}, 10},
                  {{8, 41}, 14},  {{2, 23}, 20},  {{6, 44}, 30},  {{16, 29}, 30},
                  {{30, 24}, 30}, {{40, 24}, 30}, {{120, 24}, 30},{{2, 47}, 56},
                  {{112, 48}, 70},{{16, 24}, 150}};
    for (const auto& [pair, b] : table1) {
        auto [n, alpha] = pair;
        TableRowResult row;
        row.table = "table1";
        row.n = n;
        row.alpha_or_u = alpha;
        row.b = b;
        AlphaParam ap = AlphaParam::integer(alpha);
        for (int s0 : {1, -1}) {
            for (int sn : {1, -1}) {
                auto r = linear_witness(n, ap, Int(b), s0, sn);
                if (r.status == WitnessStatus::Found) {
                    row.status = WitnessStatus::Found;
                    row.plus = *r.witness;
                    row.minus = mirror_witness(row.plus);
                    break;
                }
            }
            if (row.status == WitnessStatus::Found) break;
        }
        if (row.status != WitnessStatus::Found)
            rep.mismatches.push_back("table1 row unverifiable at (n=" + std::to_string(n) +
                                     ", alpha=" + std::to_string(alpha) + ")");
        rep.rows.push_back(std::move(row));
    }
    // the quadratic flag of (16,24): x^2 +- 780
    {
        TableRowResult row;
        row.table = "table1-quadratic";
        row.n = 16;
        row.alpha_or_u = 24;
        row.b = 780;
        auto rp = quadratic_witness(16, AlphaParam::integer(24), Int(780));
        auto rm = quadratic_witness(16, AlphaParam::integer(24), Int(-780));
        if (rp.status == WitnessStatus::Found && rm.status == WitnessStatus::Found) {
            row.status = WitnessStatus::Found;
            row.plus = *rp.witness;
            row.minus = *rm.witness;
        } else {
            rep.mismatches.push_back("table1 quadratic row (16,24) unverifiable");
        }
        rep.rows.push_back(std::move(row));
    }
    // Table 2: (u, n) -> q0 of the x^2 +- q0 row of psi(x^2)
    static const std::vector<std::pair<std::pair<std::int64_t, std::uint64_t>, std::int64_t>>
        table2 = {{{9, 4}, 3},     {{10, 3}, 3},    {{24, 16}, 3},   {{6, 16}, 15},
                  {{10, 12}, 15},  {{10, 192}, 15}, {{21, 16}, 15},  {{35, 32}, 15},
                  {{2, 2}, 21},    {{2, 8}, 21},    {{2, 512}, 21},  {{9, 64}, 21},
                  {{30, 64}, 21},  {{37, 36}, 21},  {{37, 12}, 33},  {{37, 144}, 33},
                  {{10, 24}, 69},  {{35, 512}, 1095}, {{16, 8}, 7},  {{44, 4096}, 0}};
    for (const auto& [pair, q0] : table2) {
        auto [u, n] = pair;
        TableRowResult row;
        row.table = "table2";
        row.n = n;
        row.alpha_or_u = u;
        row.b = q0;
        AlphaParam ap = AlphaParam::half(u);
        if (q0 == 0) {
            // the (44, 2^12) row: out of search scope by design
            auto r = quadratic_witness(n, ap, Int(1));
            row.status = r.status;
            if (r.status != WitnessStatus::ScopeExceeded)
                rep.mismatches.push_back("expected scope-exceeded at (44, 4096)");
        } else {
            auto rp = quadratic_witness(n, ap, Int(q0));
            if (rp.status == WitnessStatus::Found) {
                row.status = WitnessStatus::Found;
                row.plus = *rp.witness;
                row.minus = mirror_witness(row.plus);
            } else {
                rep.mismatches.push_back("table2 row unverifiable at (u=" + std::to_string(u) +
                                         ", n=" + std::to_string(n) + ")");
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

nlohmann::json TablesReport::to_json() const {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["mismatches"] = mismatches;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json jr;
        jr["table"] = r.table;
        jr["n"] = r.n;
        jr["alpha_or_u"] = r.alpha_or_u;
        jr["b"] = r.b.str();
        switch (r.status) {
            case WitnessStatus::Found: jr["status"] = "verified"; break;
            case WitnessStatus::NotSolvable: jr["status"] = "unverified"; break;
            case WitnessStatus::ScopeExceeded: jr["status"] = "scope-exceeded"; break;
        }
        if (r.status == WitnessStatus::Found) {
            jr["factor"] = r.plus.factor.to_string();
            nlohmann::json cv = nlohmann::json::array();
            for (const auto& c : r.plus.coeffs) cv.push_back(c.str());
            jr["coeffs"] = cv;
        }
        j["rows"].push_back(jr);
    }
    return j;
}

GaloisReport verify_galois(const GaloisOptions& opts, PrimeSieve& sieve) {
    GaloisReport rep;
    std::uint64_t max_n = 0;
    for (std::uint64_t n = opts.n_lo; n <= opts.n_sweep; ++n) {
        std::int64_t ucap = std::max<std::int64_t>(45, (4 * static_cast<std::int64_t>(n)) / 3);
        for (std::int64_t u = 1; u <= ucap; ++u) {
            bool residual;
            if (n <= 1) {
                residual = true;   // empty prime window (n/2, n-2)
            } else {
                residual = !lemma_pr_prime_search(u, n, sieve).has_value();
            }
            if (residual) {
                ++rep.residual_pairs;
                if (n >= 2) ++rep.residual_pairs_from_2;
                max_n = std::max(max_n, n);
            }
        }
    }
    rep.max_residual_n = max_n;
    if (max_n >= 40)
        rep.mismatches.push_back("residual pair with n >= 40 (max n = " + std::to_string(max_n) +
                                 ")");
    rep.large_n_ok = true;
    for (std::uint64_t n = opts.n_sweep + 1; n <= opts.n_large; ++n) {
        if (!galois_large_n_check(n, sieve)) {
            rep.large_n_ok = false;
            rep.mismatches.push_back("3P2 - P1 <= 2n at n = " + std::to_string(n));
        }
    }
    {
        auto sq = bsq_scan(45, 200, sieve);
        rep.bsq_ok = !sq.empty() &&
                     std::all_of(sq.begin(), sq.end(), [](const auto& p) { return p.second == 1; });
        if (!rep.bsq_ok) rep.mismatches.push_back("bsq_scan found a square b with n > 1");
    }
    {
        // -48 L_3^{(21/2)}(x^2) = (2x^2 - 15)(4x^4 - 132x^2 + 1035)
        RatPoly L = laguerre_reference(3, Rat(21, 2));
        RatPoly lhs = Rat(-48) * L.substitute_square();
        IntPoly rhs = IntPoly({Int(-15), Int(0), Int(2)}) *
                      IntPoly({Int(1035), Int(0), Int(-132), Int(0), Int(4)});
        rep.identity_10_3_ok = lhs == RatPoly(rhs);
        if (!rep.identity_10_3_ok) rep.mismatches.push_back("(10,3) factorization identity failed");
    }
    return rep;
}

nlohmann::json GaloisReport::to_json() const {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["residual_pairs"] = residual_pairs;
    j["residual_pairs_n_from_2"] = residual_pairs_from_2;
    j["max_residual_n"] = max_residual_n;
    j["large_n_ok"] = large_n_ok;
    j["bsq_ok"] = bsq_ok;
    j["identity_10_3_ok"] = identity_10_3_ok;
    j["mismatches"] = mismatches;
    return j;
}

} // namespace lagsieve
