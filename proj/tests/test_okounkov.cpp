#include <random>

#include "doctest.h"
#include "trinion/okounkov.hpp"

using namespace trinion;
using namespace trinion::okounkov;

namespace {

Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RationalVector rv(std::vector<long> entries) {
    RationalVector out;
    for (long e : entries) out.emplace_back(e);
    return out;
}

MonomialSystem monomials(int d, const std::vector<ExponentVector>& exps) {
    MonomialSystem s;
    s.d = d;
    for (const auto& e : exps) s.generators.push_back(make_polynomial(d, {{e, 1}}));
    return s;
}

Polynomial random_sparse(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> exp_dist(0, 5);
    std::uniform_int_distribution<long> coeff_dist(-4, 4);
    std::uniform_int_distribution<int> count_dist(1, 4);
    std::vector<std::pair<ExponentVector, Rational>> terms;
    const int count = count_dist(rng);
    for (int k = 0; k < count; ++k) {
        ExponentVector e(static_cast<size_t>(d));
        for (auto& x : e) x = exp_dist(rng);
        long c = coeff_dist(rng);
        if (c == 0) c = 1;
        terms.emplace_back(e, Rational(c));
    }
    Polynomial p = make_polynomial(d, terms);
    return p.is_zero() ? make_polynomial(d, {{ExponentVector(static_cast<size_t>(d), 0), 1}}) : p;
}

ExponentVector vec_sum(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

TEST_CASE("lex valuation basics") {
    const std::vector<int> xy{0, 1};
    const Polynomial g = make_polynomial(2, {{{0, 2}, 1}, {{1, 1}, 1}});  // y^2 + xy
    CHECK(lex_valuation(g, xy) == ExponentVector{0, 2});

    const Polynomial mono = make_polynomial(2, {{{3, 5}, frac(2, 7)}});
    CHECK(lex_valuation(mono, xy) == ExponentVector{3, 5});

    // Reversed coordinate priority flips the answer for g.
    CHECK(lex_valuation(g, {1, 0}) == ExponentVector{1, 1});

    const Polynomial zero = make_polynomial(2, {});
    CHECK_THROWS_AS(lex_valuation(zero, xy), ZeroPolynomial);
}

TEST_CASE("valuation additivity on random sparse pairs") {
    std::mt19937_64 rng(131);
    const std::vector<int> order{0, 1, 2};
    int tested = 0;
    while (tested < 100) {
        const Polynomial g = random_sparse(3, rng);
        const Polynomial h = random_sparse(3, rng);
        const Polynomial gh = multiply(g, h);
        if (gh.is_zero()) continue;  // cancellation; additivity still holds but nothing to test
        ++tested;
        CHECK(lex_valuation(gh, order) ==
              vec_sum(lex_valuation(g, order), lex_valuation(h, order)));
    }
}

TEST_CASE("semigroup points of the projective line") {
    const MonomialSystem s = monomials(1, {{0}, {1}});
    const GradedPointSet pts = semigroup_points(s, 2);
    const std::set<GradedPoint> expected{
        {1, {0}}, {1, {1}}, {2, {0}}, {2, {1}}, {2, {2}}};
    CHECK(pts.points == expected);
}

TEST_CASE("level-2 points are pairwise sums of level-1 points for monomial systems") {
    const MonomialSystem s = monomials(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const GradedPointSet pts = semigroup_points(s, 2);
    std::set<ExponentVector> level1, level2;
    for (const GradedPoint& p : pts.points) {
        (p.m == 1 ? level1 : level2).insert(p.nu);
    }
    std::set<ExponentVector> sums;
    for (const auto& a : level1) {
        for (const auto& b : level1) sums.insert(vec_sum(a, b));
    }
    CHECK(level2 == sums);
}

TEST_CASE("okounkov bodies of projective spaces are standard simplices") {
    const RationalPolytope segment = okounkov_body(monomials(1, {{0}, {1}}), 2);
    CHECK(segment.vertices == std::vector<RationalVector>{rv({0}), rv({1})});

    const RationalPolytope triangle = okounkov_body(monomials(2, {{0, 0}, {1, 0}, {0, 1}}), 2);
    CHECK(triangle.vertices ==
          std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0})});

    const RationalPolytope tetra =
        okounkov_body(monomials(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2);
    CHECK(tetra.vertices == std::vector<RationalVector>{rv({0, 0, 0}), rv({0, 0, 1}),
                                                        rv({0, 1, 0}), rv({1, 0, 0})});
}

TEST_CASE("blown-up plane body lops off a corner") {
    const MonomialSystem s = monomials(2, {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    for (int m_max : {1, 2, 3}) {
        const RationalPolytope body = okounkov_body(s, m_max);
        CHECK(body.vertices == std::vector<RationalVector>{rv({0, 1}), rv({0, 2}), rv({1, 0}),
                                                           rv({2, 0})});
    }
    CHECK(body_stabilized(s, 2));
    CHECK(body_stabilized(s, 3));
}

TEST_CASE("bodies grow monotonically with the cutoff") {
    const MonomialSystem s = monomials(2, {{0, 0}, {2, 1}, {1, 2}});
    const RationalPolytope small = okounkov_body(s, 1);
    const RationalPolytope large = okounkov_body(s, 2);
    for (const RationalVector& v : small.vertices) {
        CHECK(in_hull(large.vertices, v));
    }
}

TEST_CASE("hull membership and reduction") {
    const std::vector<RationalVector> square{rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
    CHECK(in_hull(square, {frac(1, 2), frac(1, 2)}));
    CHECK(in_hull(square, rv({1, 1})));
    CHECK_FALSE(in_hull(square, {frac(3, 2), frac(1, 2)}));

    auto with_center = square;
    with_center.push_back({frac(1, 3), frac(2, 5)});
    const RationalPolytope hull = convex_hull(2, with_center);
    CHECK(hull.vertices == std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0}),
                                                       rv({1, 1})});
}

TEST_CASE("lattice counts") {
    const RationalPolytope segment{1, {rv({0}), rv({1})}};
    CHECK(lattice_count(segment, 3) == 4);

    const RationalPolytope triangle{2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}};
    CHECK(lattice_count(triangle, 2) == 6);

    const RationalPolytope quad{2, {rv({0, 1}), rv({0, 2}), rv({1, 0}), rv({2, 0})}};
    CHECK(lattice_count(quad, 1) == 5);

    CHECK_THROWS_AS(lattice_count(RationalPolytope{2, {}}, 1), Unbounded);
}

TEST_CASE("simplex lattice counts match binomial coefficients") {
    auto binom = [](long a, long b) {
        long long out = 1;
        for (long k = 1; k <= b; ++k) out = out * (a - b + k) / k;
        return out;
    };
    for (int d = 1; d <= 3; ++d) {
        std::vector<RationalVector> verts{RationalVector(static_cast<size_t>(d), Rational(0))};
        for (int c = 0; c < d; ++c) {
            RationalVector e(static_cast<size_t>(d), Rational(0));
            e[static_cast<size_t>(c)] = 1;
            verts.push_back(e);
        }
        const RationalPolytope simplex{d, verts};
        for (long k = 1; k <= 10; ++k) {
            CHECK(lattice_count(simplex, k) == binom(k + d, d));
        }
    }
}
