#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

#include "trinion/errors.hpp"

// Newton-Okounkov bodies of monomial linear systems: lexicographic
// valuations, graded valuation semigroups, and exact rational hulls.  All
// arithmetic in this module is exact.
namespace trinion::okounkov {

using Rational = mpq_class;
using ExponentVector = std::vector<long>;
using RationalVector = std::vector<Rational>;

/// Sparse polynomial in d variables; only nonzero coefficients are stored.
struct Polynomial {
    int d = 0;
    std::map<ExponentVector, Rational> terms;

    bool is_zero() const { return terms.empty(); }
};

Polynomial make_polynomial(int d, const std::vector<std::pair<ExponentVector, Rational>>& terms);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

// Minimal exponent vector under the lexicographic order that compares
// coordinate order[0] first, then order[1], and so on.
ExponentVector lex_valuation(const Polynomial& g, const std::vector<int>& order);

struct MonomialSystem {
    int d = 0;
    std::vector<Polynomial> generators;
};

struct GradedPoint {
    int m = 0;
    ExponentVector nu;

    auto operator<=>(const GradedPoint&) const = default;
};

struct GradedPointSet {
    std::set<GradedPoint> points;
};

/// Valuations of all m-fold products of generators, m = 1..m_max, under the
/// identity coordinate order.  Products are expanded as genuine polynomials,
/// so cancellations are honored.
GradedPointSet semigroup_points(const MonomialSystem& s, int m_max);

/// Vertices are hull-irredundant and sorted lexicographically.
struct RationalPolytope {
    int d = 0;
    std::vector<RationalVector> vertices;

    bool operator==(const RationalPolytope&) const = default;
};

/// True iff x lies in the convex hull of points (exact LP feasibility).
bool in_hull(const std::vector<RationalVector>& points, const RationalVector& x);

/// Irredundant sorted vertex list of the hull of the given points.
RationalPolytope convex_hull(int d, std::vector<RationalVector> points);

/// Level-m_max approximation of the Okounkov body: the hull of { nu/m }.
RationalPolytope okounkov_body(const MonomialSystem& s, int m_max);

/// True when the body is unchanged between m_max-1 and m_max.
bool body_stabilized(const MonomialSystem& s, int m_max);

/// #(scale * P intersected with the integer lattice), by exact enumeration
/// over the bounding box.  Throws Unbounded on an empty vertex list.
long long lattice_count(const RationalPolytope& p, long scale);

}  // namespace trinion::okounkov
