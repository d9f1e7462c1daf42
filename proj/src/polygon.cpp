#include "lagsieve/polygon.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lagsieve {

namespace {

std::vector<LatticePoint> lower_hull(const std::vector<LatticePoint>& pts) {
    std::vector<LatticePoint> h;
    for (const auto& pt : pts) {
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h.back();
            // pop b if it lies on or above segment a..pt
            if ((b.y - a.y) * (pt.x - a.x) >= (pt.y - a.y) * (b.x - a.x))
                h.pop_back();
            else
                break;
        }
        h.push_back(pt);
    }
    return h;
}

std::vector<Edge> edges_from_vertices(const std::vector<LatticePoint>& v) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        Edge e;
        e.start = v[i];
        e.end = v[i + 1];
        e.horizontal_length = v[i + 1].x - v[i].x;
        std::int64_t rise = v[i + 1].y - v[i].y;
        std::int64_t g = std::gcd(std::abs(rise), e.horizontal_length);
        if (g == 0) g = 1;
        e.slope_num = rise / g;
        e.slope_den = e.horizontal_length / g;
        e.primitive_step = e.slope_den;
        e.lattice_point_count = e.horizontal_length / e.primitive_step - 1;
        out.push_back(e);
    }
    return out;
}

NewtonPolygon hull_polygon(std::vector<LatticePoint> pts, std::uint64_t p, std::int64_t m) {
    NewtonPolygon np;
    np.prime = p;
    np.m = m;
    np.points = std::move(pts);
    np.vertices = lower_hull(np.points);
    np.edges = edges_from_vertices(np.vertices);
    return np;
}

// nu_p(C(n, j)) by Legendre digit sums.
std::int64_t binom_val(std::uint64_t n, std::uint64_t j, std::uint64_t p) {
    return (static_cast<std::int64_t>(digit_sum(j, p)) +
            static_cast<std::int64_t>(digit_sum(n - j, p)) -
            static_cast<std::int64_t>(digit_sum(n, p))) /
           static_cast<std::int64_t>(p - 1);
}

// nu_p of the product of the arithmetic progression a + d*i for i in
// (j, n], i.e. the product part of B_j.
std::int64_t progression_val(std::uint64_t n, const AlphaParam& alpha, std::uint64_t j,
                             std::uint64_t p) {
    if (alpha.d == 1) {
        // (alpha+j+1)...(alpha+n), a factorial ratio when alpha+j >= 0
        std::int64_t lo = alpha.u + static_cast<std::int64_t>(j);
        std::int64_t hi = alpha.u + static_cast<std::int64_t>(n);
        if (lo < 0) throw std::invalid_argument("progression_val: negative range");
        return legendre_val_factorial(hi, p) - legendre_val_factorial(lo, p);
    }
    if (p == 2 && alpha.d == 2) return 0;   // all terms odd
    // count multiples of p^k among a + (u+i)d, i in (j, n]
    std::int64_t total = 0;
    Int pk = p;
    for (;;) {
        // solve a + (u+i)d ≡ 0 mod p^k for i in (j, n]
        // terms form an AP with step d; count i with term ≡ 0 (mod pk)
        Int d = alpha.d;
        Int g = gcd(d, pk);
        Int lo_term = alpha.term(static_cast<std::int64_t>(j) + 1);
        Int hi_term = alpha.term(static_cast<std::int64_t>(n));
        if (hi_term < lo_term) break;
        std::int64_t cnt = 0;
        if (g == 1) {
            // i ≡ i0 (mod pk): count solutions in (j, n]
            // term(i) = a + (u+i)d; term(i) ≡ 0 <=> i ≡ -a*d^{-1} - u (mod pk)
            Int dinv;
            {
                // modular inverse of d mod pk (g = 1)
                Int t0 = 0, t1 = 1, r0 = pk, r1 = d % pk;
                while (r1 != 0) {
                    Int q = r0 / r1;
                    Int tmp = t0 - q * t1; t0 = t1; t1 = tmp;
                    tmp = r0 - q * r1; r0 = r1; r1 = tmp;
                }
                dinv = t0 % pk;
                if (dinv < 0) dinv += pk;
            }
            Int i0 = ((-Int(alpha.a) * dinv) % pk - Int(alpha.u) % pk) % pk;
            if (i0 < 0) i0 += pk;
            // count i in [j+1, n] with i ≡ i0 (mod pk)
            Int lo = Int(j) + 1, hi = Int(n);
            Int first = lo + ((i0 - lo) % pk + pk) % pk;
            if (first <= hi) cnt = static_cast<std::int64_t>((hi - first) / pk + 1);
        } else {
            // gcd(d, p) > 1: term ≡ a (mod p), nonzero since gcd(a,d)=1
            cnt = 0;
        }
        if (cnt == 0) break;
        total += cnt;
        pk *= p;
    }
    return total;
}

} // namespace

std::pair<std::int64_t, std::int64_t> NewtonPolygon::max_slope() const {
    if (edges.empty()) return {0, 1};
    const Edge& e = edges.back();
    return {e.slope_num, e.slope_den};
}

std::string NewtonPolygon::to_json() const {
    nlohmann::json j;
    j["prime"] = prime;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices) j["vertices"].push_back({v.x, v.y});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges) {
        nlohmann::json je;
        je["slope"] = std::to_string(e.slope_num) + "/" + std::to_string(e.slope_den);
        je["length"] = e.horizontal_length;
        je["lattice_points"] = e.lattice_point_count;
        j["edges"].push_back(je);
    }
    return j.dump();
}

NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p, PrimeSieve& sieve) {
    if (f.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
    if (f.constant_term() == 0)
        throw std::invalid_argument("newton_polygon: zero constant term (a_0 a_m != 0 required)");
    if (!sieve.is_prime_checked(p)) throw std::invalid_argument("newton_polygon: p not prime");
    std::int64_t m = f.degree();
    std::vector<LatticePoint> pts;
    for (std::int64_t i = 0; i <= m; ++i) {
        const Int& c = f[static_cast<std::size_t>(m - i)];
        if (c == 0) continue;   // nu(0) = infinity: no point
        pts.push_back({i, val_p(c, p)});
    }
    return hull_polygon(std::move(pts), p, m);
}

std::vector<std::int64_t> g_template_heights(std::uint64_t n, const AlphaParam& alpha,
                                             std::uint64_t p, bool squared) {
    std::vector<std::int64_t> h(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j)
        h[j] = binom_val(n, j, p) + progression_val(n, alpha, j, p);
    if (!squared) return h;
    std::vector<std::int64_t> h2(2 * n + 1, -1);
    for (std::uint64_t j = 0; j <= n; ++j) h2[2 * j] = h[j];
    return h2;
}

NewtonPolygon polygon_from_heights(const std::vector<std::int64_t>& heights, std::uint64_t p) {
    std::int64_t m = static_cast<std::int64_t>(heights.size()) - 1;
    std::vector<LatticePoint> pts;
    for (std::int64_t i = 0; i <= m; ++i) {
        std::int64_t v = heights[static_cast<std::size_t>(m - i)];   // abscissa i <-> coeff m-i
        if (v >= 0) pts.push_back({i, v});
    }
    return hull_polygon(std::move(pts), p, m);
}

NewtonPolygon newton_polygon_template(std::uint64_t n, const AlphaParam& alpha,
                                      std::uint64_t p, bool squared) {
    return polygon_from_heights(g_template_heights(n, alpha, p, squared), p);
}

std::vector<bool> attainable_degrees(const NewtonPolygon& np) {
    std::int64_t m = np.vertices.empty() ? 0 : np.vertices.back().x - np.vertices.front().x;
    std::vector<bool> can(static_cast<std::size_t>(m) + 1, false);
    can[0] = true;
    for (const auto& e : np.edges) {
        std::vector<bool> nxt(can.size(), false);
        std::int64_t reps = e.horizontal_length / e.primitive_step;
        for (std::size_t d = 0; d < can.size(); ++d) {
            if (!can[d]) continue;
            for (std::int64_t c = 0; c <= reps; ++c) {
                std::size_t nd = d + static_cast<std::size_t>(c * e.primitive_step);
                if (nd < nxt.size()) nxt[nd] = true;
            }
        }
        can.swap(nxt);
    }
    return can;
}

const char* lemma_tag_name(LemmaTag t) {
    switch (t) {
        case LemmaTag::Dumas: return "dumas";
        case LemmaTag::Filaseta: return "filaseta";
        case LemmaTag::MonicLinear: return "monic_linear";
        case LemmaTag::GLemma: return "glemma";
        case LemmaTag::GLemma1: return "glemma1";
        case LemmaTag::HalfIrred: return "half_irred";
        case LemmaTag::TData: return "t_data";
        case LemmaTag::WitnessSearch: return "witness_search";
        case LemmaTag::Hajir: return "hajir";
        case LemmaTag::PrPrime: return "pr_prime";
        case LemmaTag::LargeN: return "large_n";
    }
    return "?";
}

CriterionReport filaseta_exclusion(std::uint64_t n, const AlphaParam& alpha, std::uint64_t p,
                                   std::int64_t l, std::int64_t k, bool squared) {
    CriterionReport rep;
    rep.lemma_tag = LemmaTag::Filaseta;
    rep.prime_used = p;
    auto h = g_template_heights(n, alpha, p, squared);
    std::int64_t m = static_cast<std::int64_t>(h.size()) - 1;
    if (!(m >= 2 * k && 2 * k > 2 * l && l >= 0))
        throw std::invalid_argument("filaseta_exclusion: need m >= 2k > 2l >= 0");
    if (h[static_cast<std::size_t>(m)] != 0) {
        rep.notes = "p divides leading coefficient";
        return rep;
    }
    for (std::int64_t j = 0; j <= m - l - 1; ++j) {
        std::int64_t v = h[static_cast<std::size_t>(j)];
        if (v == 0) {   // v < 0 marks a structurally-zero coefficient (divisible)
            rep.notes = "divisibility run too short for this l";
            return rep;
        }
    }
    auto np = polygon_from_heights(h, p);
    auto [sn, sd] = np.max_slope();
    // slope < 1/k  <=>  sn * k < sd
    if (sn * k < sd) {
        rep.conclusive = true;
        for (std::int64_t d = l + 1; d <= k; ++d) rep.excluded_degrees.push_back(d);
        rep.notes = "rightmost slope " + std::to_string(sn) + "/" + std::to_string(sd);
    } else {
        rep.notes = "rightmost slope " + std::to_string(sn) + "/" + std::to_string(sd) +
                    " not below 1/" + std::to_string(k);
    }
    return rep;
}

CriterionReport dumas_exclusion_all_coeffs(std::uint64_t n, const AlphaParam& alpha,
                                           std::uint64_t p, std::int64_t k,
                                           const DumasOptions& opts) {
    CriterionReport rep;
    rep.lemma_tag = LemmaTag::Dumas;
    rep.prime_used = p;
    if (k < 1) throw std::invalid_argument("dumas_exclusion_all_coeffs: k >= 1 required");
    auto h = g_template_heights(n, alpha, p, opts.squared);
    std::int64_t m = static_cast<std::int64_t>(h.size()) - 1;
    std::int64_t y0 = h[static_cast<std::size_t>(m)];   // left endpoint height (leading coeff)
    std::int64_t ym = h[0];                              // right endpoint height (constant)
    if (y0 != 0) {
        rep.notes = "template not monic at this prime";
        return rep;
    }
    // points strictly below the chord (0, y0) .. (m, ym); each can sit at any
    // integer height from its template value up to just below the chord, or
    // vanish from hull candidacy entirely (p | a_j).
    struct FreePoint {
        std::int64_t x;
        std::int64_t lo;      // template height
        std::int64_t hi;      // last integer height strictly below the chord
    };
    std::vector<FreePoint> free_pts;
    std::size_t combos = 1;
    for (std::int64_t i = 1; i < m; ++i) {
        std::int64_t v = h[static_cast<std::size_t>(m - i)];
        if (v < 0) continue;
        // strictly below chord: v * m < y0*(m-i)... chord from (0,y0) to (m,ym)
        if (v * m < y0 * (m - i) + ym * i) {
            // ceil of chord height minus 1, still strictly below
            std::int64_t num = y0 * (m - i) + ym * i;   // chord * m
            std::int64_t hi = (num % m == 0) ? num / m - 1 : num / m;
            free_pts.push_back({i, v, hi});
            combos *= static_cast<std::size_t>(hi - v + 2);   // heights + removal
            if (combos > opts.enumeration_cap) {
                rep.notes = "below-chord enumeration exceeds cap";
                return rep;
            }
        }
    }
    std::vector<LatticePoint> base{{0, y0}, {m, ym}};
    std::vector<std::size_t> state(free_pts.size(), 0);
    for (;;) {
        std::vector<LatticePoint> pts = base;
        for (std::size_t t = 0; t < free_pts.size(); ++t) {
            std::size_t s = state[t];
            std::int64_t span = free_pts[t].hi - free_pts[t].lo;
            if (static_cast<std::int64_t>(s) <= span)
                pts.push_back({free_pts[t].x, free_pts[t].lo + static_cast<std::int64_t>(s)});
            // s == span+1 means removed
        }
        std::sort(pts.begin(), pts.end(),
                  [](const LatticePoint& a, const LatticePoint& b) { return a.x < b.x; });
        auto np = hull_polygon(std::move(pts), p, m);
        auto can = attainable_degrees(np);
        if (k < static_cast<std::int64_t>(can.size()) && can[static_cast<std::size_t>(k)]) {
            rep.notes = "degree attainable for some coefficient twist";
            return rep;
        }
        // advance mixed-radix state
        std::size_t t = 0;
        for (; t < free_pts.size(); ++t) {
            std::size_t radix = static_cast<std::size_t>(free_pts[t].hi - free_pts[t].lo + 2);
            if (++state[t] < radix) break;
            state[t] = 0;
        }
        if (t == free_pts.size()) break;
    }
    rep.conclusive = true;
    rep.excluded_degrees = {k};
    rep.notes = "degree unattainable for every admissible polygon";
    return rep;
}

std::vector<std::int64_t> monic_linear_constraint(std::uint64_t n, const AlphaParam& alpha,
                                                  std::uint64_t p, bool squared) {
    auto h = g_template_heights(n, alpha, p, squared);
    std::int64_t m = static_cast<std::int64_t>(h.size()) - 1;
    std::int64_t vB0 = h[0];
    auto np = polygon_from_heights(h, p);
    auto [sn, sd] = np.max_slope();
    // raising interior points can only lower the rightmost slope, so every
    // edge of every admissible polygon has slope <= sn/sd
    std::int64_t emax = std::min(sn / sd, vB0);
    bool interior_zero = false;
    for (std::int64_t j = 1; j < m; ++j)
        if (h[static_cast<std::size_t>(j)] == 0) { interior_zero = true; break; }
    std::vector<std::int64_t> out;
    if (vB0 == 0 || interior_zero) out.push_back(0);
    for (std::int64_t e = 1; e <= emax; ++e) out.push_back(e);
    return out;
}

} // namespace lagsieve
