#include "trinion/okounkov.hpp"

#include <algorithm>
#include <numeric>

namespace trinion::okounkov {

Polynomial make_polynomial(int d, const std::vector<std::pair<ExponentVector, Rational>>& terms) {
    if (d < 1) throw Error("polynomial needs at least one variable");
    Polynomial p;
    p.d = d;
    for (const auto& [alpha, coeff] : terms) {
        if (static_cast<int>(alpha.size()) != d) throw Error("exponent vector length mismatch");
        for (long e : alpha) {
            if (e < 0) throw Error("negative exponent");
        }
        if (coeff == 0) continue;
        auto [it, fresh] = p.terms.emplace(alpha, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) p.terms.erase(it);
        }
    }
    return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.d != b.d) throw Error("polynomial variable counts differ");
    Polynomial out;
    out.d = a.d;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            ExponentVector e(static_cast<size_t>(a.d));
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.terms.emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

ExponentVector lex_valuation(const Polynomial& g, const std::vector<int>& order) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (static_cast<int>(order.size()) != g.d) throw Error("order length mismatch");
    auto lex_less = [&order](const ExponentVector& a, const ExponentVector& b) {
        for (int coord : order) {
            const size_t c = static_cast<size_t>(coord);
            if (a[c] != b[c]) return a[c] < b[c];
        }
        return false;
    };
    const ExponentVector* best = nullptr;
    for (const auto& [alpha, coeff] : g.terms) {
        if (best == nullptr || lex_less(alpha, *best)) best = &alpha;
    }
    return *best;
}

namespace {

void products_rec(const MonomialSystem& s, int m_max, size_t start, int m, const Polynomial& prod,
                  const std::vector<int>& order, GradedPointSet& out) {
    if (m >= 1 && !prod.is_zero()) {
        out.points.insert(GradedPoint{m, lex_valuation(prod, order)});
    }
    if (m == m_max || prod.is_zero()) return;
    for (size_t g = start; g < s.generators.size(); ++g) {
        products_rec(s, m_max, g, m + 1, multiply(prod, s.generators[g]), order, out);
    }
}

}  // namespace

GradedPointSet semigroup_points(const MonomialSystem& s, int m_max) {
    if (m_max < 1) throw Error("m_max must be positive");
    if (s.generators.empty()) throw Error("empty generator set");
    for (const Polynomial& g : s.generators) {
        if (g.is_zero()) throw ZeroPolynomial();
        if (g.d != s.d) throw Error("generator variable count mismatch");
    }
    std::vector<int> order(static_cast<size_t>(s.d));
    std::iota(order.begin(), order.end(), 0);
    Polynomial one = make_polynomial(s.d, {{ExponentVector(static_cast<size_t>(s.d), 0), 1}});
    GradedPointSet out;
    products_rec(s, m_max, 0, 0, one, order, out);
    return out;
}

bool in_hull(const std::vector<RationalVector>& points, const RationalVector& x) {
    if (points.empty()) return false;
    const size_t d = x.size();
    const size_t rows = d + 1;
    const size_t k = points.size();
    const size_t rhs = k + rows;

    // Phase-1 simplex over exact rationals: lambda >= 0, sum lambda = 1,
    // sum lambda p_i = x, artificial variables in columns k..k+rows-1.
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(k + rows + 1, Rational(0)));
    for (size_t r = 0; r < d; ++r) {
        for (size_t j = 0; j < k; ++j) t[r][j] = points[j][r];
        t[r][rhs] = x[r];
    }
    for (size_t j = 0; j < k; ++j) t[d][j] = 1;
    t[d][rhs] = 1;

    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; ++r) {
        if (t[r][rhs] < 0) {
            for (auto& v : t[r]) v = -v;
        }
        t[r][k + r] = 1;
        basis[r] = k + r;
    }

    while (true) {
        // Reduced costs of the artificial-sum objective.
        size_t enter = k;
        for (size_t j = 0; j < k; ++j) {
            Rational cost(0);
            bool basic = false;
            for (size_t r = 0; r < rows; ++r) {
                if (basis[r] == j) basic = true;
                if (basis[r] >= k) cost += t[r][j];
            }
            if (!basic && cost > 0) {
                enter = j;  // Bland: smallest improving index
                break;
            }
        }
        if (enter == k) break;

        size_t leave = rows;
        Rational best(0);
        for (size_t r = 0; r < rows; ++r) {
            if (t[r][enter] > 0) {
                const Rational ratio = t[r][rhs] / t[r][enter];
                if (leave == rows || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
        }
        if (leave == rows) break;  // objective unbounded below cannot happen; bail out

        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        for (size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rational factor = t[r][enter];
            for (size_t j = 0; j <= rhs; ++j) t[r][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rational infeasibility(0);
    for (size_t r = 0; r < rows; ++r) {
        if (basis[r] >= k) infeasibility += t[r][rhs];
    }
    return infeasibility == 0;
}

RationalPolytope convex_hull(int d, std::vector<RationalVector> points) {
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != d) throw Error("hull point dimension mismatch");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // A point is a vertex iff it is outside the hull of the others; removing
    // interior points one at a time never discards a vertex.
    for (size_t i = 0; i < points.size();) {
        std::vector<RationalVector> others;
        others.reserve(points.size() - 1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j != i) others.push_back(points[j]);
        }
        if (!others.empty() && in_hull(others, points[i])) {
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    RationalPolytope out;
    out.d = d;
    out.vertices = std::move(points);
    return out;
}

RationalPolytope okounkov_body(const MonomialSystem& s, int m_max) {
    const GradedPointSet graded = semigroup_points(s, m_max);
    std::vector<RationalVector> points;
    for (const GradedPoint& gp : graded.points) {
        RationalVector v;
        v.reserve(gp.nu.size());
        for (long e : gp.nu) {
            Rational q(e, gp.m);
            q.canonicalize();
            v.push_back(q);
        }
        points.push_back(std::move(v));
    }
    return convex_hull(s.d, std::move(points));
}

bool body_stabilized(const MonomialSystem& s, int m_max) {
    if (m_max <= 1) return false;
    return okounkov_body(s, m_max - 1) == okounkov_body(s, m_max);
}

namespace {

long floor_to_long(const Rational& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return static_cast<long>(z.get_si());
}

long ceil_to_long(const Rational& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return static_cast<long>(z.get_si());
}

}  // namespace

long long lattice_count(const RationalPolytope& p, long scale) {
    if (p.vertices.empty()) throw Unbounded();
    if (scale < 1) throw Error("scale must be positive");
    const size_t d = static_cast<size_t>(p.d);

    std::vector<RationalVector> scaled = p.vertices;
    for (auto& v : scaled) {
        for (auto& c : v) c *= scale;
    }
    std::vector<long> lo(d), hi(d);
    for (size_t c = 0; c < d; ++c) {
        Rational mn = scaled[0][c], mx = scaled[0][c];
        for (const auto& v : scaled) {
            mn = std::min(mn, v[c]);
            mx = std::max(mx, v[c]);
        }
        lo[c] = ceil_to_long(mn);
        hi[c] = floor_to_long(mx);
        if (hi[c] < lo[c]) return 0;
    }

    long long count = 0;
    std::vector<long> point = lo;
    while (true) {
        RationalVector x(d);
        for (size_t c = 0; c < d; ++c) x[c] = point[c];
        if (in_hull(scaled, x)) ++count;

        size_t c = 0;
        while (c < d && point[c] == hi[c]) {
            point[c] = lo[c];
            ++c;
        }
        if (c == d) break;
        ++point[c];
    }
    return count;
}

}  // namespace trinion::okounkov
