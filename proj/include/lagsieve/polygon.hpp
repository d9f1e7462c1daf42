#pragma once

#include "lagsieve/polys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lagsieve {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Maximal lower-hull segment of a single slope. primitive_step is the
// denominator of the slope in lowest terms; lattice_point_count counts the
// interior lattice points on the edge.
struct Edge {
    LatticePoint start;
    LatticePoint end;
    std::int64_t slope_num = 0;        // reduced, slope_den > 0
    std::int64_t slope_den = 1;
    std::int64_t primitive_step = 1;   // == slope_den
    std::int64_t horizontal_length = 0;
    std::int64_t lattice_point_count = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Newton polygon NP_p(f): abscissa i carries nu_p(a_{m-i}), zero
// coefficients (nu = infinity) contribute no point. Vertices are strict:
// no two edges share a slope, collinear runs are merged.
struct NewtonPolygon {
    std::uint64_t prime = 2;
    std::int64_t m = 0;                      // degree of the polynomial
    std::vector<LatticePoint> points;        // finite points, ascending x
    std::vector<LatticePoint> vertices;
    std::vector<Edge> edges;

    // Rightmost (= maximal) edge slope as a reduced fraction; {0,1} for a
    // degenerate single-vertex polygon.
    std::pair<std::int64_t, std::int64_t> max_slope() const;

    std::string to_json() const;
};

NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p, PrimeSieve& sieve);

// Heights nu_p(B_{m-i}) of the g-template computed arithmetically (Legendre
// digit sums for d = 1, progression counts for d = 2); never materializes
// the coefficients, so n = 2^12 polygons are immediate.
// If squared is set the template is g(x^2) (odd abscissas empty).
std::vector<std::int64_t> g_template_heights(std::uint64_t n, const AlphaParam& alpha,
                                             std::uint64_t p, bool squared = false);

NewtonPolygon newton_polygon_template(std::uint64_t n, const AlphaParam& alpha,
                                      std::uint64_t p, bool squared = false);

// Hull of explicit (abscissa, height) points; heights < 0 mean "no point".
NewtonPolygon polygon_from_heights(const std::vector<std::int64_t>& heights, std::uint64_t p);

// Factor degrees consistent with the polygon under Dumas' theorem: subset
// sums over edges of multiples of each edge's primitive step. Index k of
// the returned vector is true iff degree k is attainable.
std::vector<bool> attainable_degrees(const NewtonPolygon& np);

enum class LemmaTag {
    Dumas,            // Lemma 2.1 machinery (all-coefficients case analysis)
    Filaseta,         // Lemma 2.2
    MonicLinear,      // Lemma 2.7 valuation constraint
    GLemma,           // Lemma 3.1
    GLemma1,          // Lemma 3.2
    HalfIrred,        // Lemma 4.1
    TData,            // exception-table gate (Lemma 2.3 / 2.4 data)
    WitnessSearch,    // exact linear-factor decision
    Hajir,            // Lemma 5.1
    PrPrime,          // Lemma 5.3
    LargeN,           // Lemma 5.4 prime-gap inequality
};

const char* lemma_tag_name(LemmaTag t);

// Outcome of one exclusion criterion. conclusive = false implies
// excluded_degrees is empty.
struct CriterionReport {
    LemmaTag lemma_tag = LemmaTag::Dumas;
    std::optional<std::uint64_t> prime_used;
    std::vector<std::int64_t> excluded_degrees;
    bool conclusive = false;
    std::string notes;
};

// Lemma 2.2: if p | b_j for 0 <= j <= m-l-1, p does not divide b_m, and the
// rightmost edge of NP_p(g) has slope < 1/k, then no coefficient twist with
// p not dividing a_0 a_m has a factor of degree in [l+1, k].
// Preconditions m >= 2k > 2l >= 0 are enforced.
CriterionReport filaseta_exclusion(std::uint64_t n, const AlphaParam& alpha, std::uint64_t p,
                                   std::int64_t l, std::int64_t k, bool squared = false);

struct DumasOptions {
    std::size_t enumeration_cap = std::size_t(1) << 22;
    bool squared = false;
};

// Dumas exclusion quantified over ALL admissible twists a_j: enumerates the
// integer heights each strictly-below-chord point can take (its g-height up
// to the chord, or removed entirely when p | a_j lifts it on or above), and
// demands degree k unattainable in every resulting hull. Returns an
// inconclusive report instead of running an enumeration beyond the cap.
CriterionReport dumas_exclusion_all_coeffs(std::uint64_t n, const AlphaParam& alpha,
                                           std::uint64_t p, std::int64_t k,
                                           const DumasOptions& opts = {});

// Lemma 2.7 constraint: the set of exponents e = nu_p(b) compatible with
// some admissible NP of psi having an edge of integer slope e over
// horizontal length >= 1. Sound over-approximation:
//   e <= floor(rightmost slope of NP_p(g)),  e <= nu_p(B_0),
//   e = 0 only if some interior template height is exactly 0.
// An empty set certifies that no monic linear factor exists at all.
std::vector<std::int64_t> monic_linear_constraint(std::uint64_t n, const AlphaParam& alpha,
                                                  std::uint64_t p, bool squared = false);

} // namespace lagsieve
