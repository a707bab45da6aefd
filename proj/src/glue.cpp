#include "trinion/glue.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace trinion::glue {

FramedSheafDescriptor validate_framed_sheaf(const FramedSheafDescriptor& d) {
    if (d.n < 1) throw Error("rank must be positive");
    for (const PunctureData& p : d.punctures) {
        if (p.torsion_rank < 0) throw Error("negative torsion rank");
        for (int i : p.beta_nonzero) {
            if (i < 1 || i > d.n) throw Error("flag degree out of range");
        }
        if (p.torsion_rank >= d.n) throw TorsionTooLarge();
        if (p.torsion_rank == 0) continue;
        if (p.beta_nonzero.count(d.n) != 0) {
            throw TorsionPatternViolation("top framing must vanish under torsion");
        }
        for (int i = 1; i < p.torsion_rank; ++i) {
            if (p.beta_nonzero.count(i) != 0) {
                throw TorsionPatternViolation("framings below the torsion rank must vanish");
            }
        }
        if (p.beta_nonzero.count(p.torsion_rank) == 0) {
            throw TorsionPatternViolation("the torsion-rank framing must be nonzero");
        }
    }
    return d;
}

bool match_patterns(const FaceIndex& i1, const FaceIndex& i2, int n) {
    FaceIndex reversed;
    for (int i : i1) reversed.insert(n - i);
    return reversed == i2;
}

double glue_residual(const AlcovePoint& a1, const AlcovePoint& a2) {
    if (a1.rank() != a2.rank()) throw RankMismatch();
    const int n = a1.rank();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(a1[i] + a2[n - 1 - i]));
    }
    return worst;
}

TrinionGraph trinion_graph(int genus) {
    if (genus < 2) throw InvalidGraph("genus must be at least 2");
    TrinionGraph g;
    g.trinions = 2 * genus - 2;
    for (int t = 0; t < g.trinions; ++t) {
        g.edges.emplace_back(SlotRef{t, 0}, SlotRef{(t + 1) % g.trinions, 1});
    }
    for (int k = 0; k + 1 < genus; ++k) {
        g.edges.emplace_back(SlotRef{2 * k, 2}, SlotRef{2 * k + 1, 2});
    }
    return g;
}

namespace {

using okounkov::Rational;
using okounkov::RationalPolytope;
using okounkov::RationalVector;

void check_fully_glued(const TrinionGraph& graph) {
    if (graph.trinions < 1) throw InvalidGraph("no trinions");
    std::map<SlotRef, int> used;
    for (const auto& [a, b] : graph.edges) {
        for (const SlotRef& s : {a, b}) {
            if (s.trinion < 0 || s.trinion >= graph.trinions || s.slot < 0 || s.slot > 2) {
                throw InvalidGraph("slot reference out of range");
            }
            if (++used[s] > 1) throw InvalidGraph("slot glued twice");
        }
    }
    if (used.size() != static_cast<size_t>(3 * graph.trinions)) {
        throw InvalidGraph("graph is not fully glued");
    }
}

// Cuts a V-polytope by the hyperplane {coeff . x = 0}: kept vertices plus all
// segment crossings between strictly positive and strictly negative ones.
std::vector<RationalVector> cut_by_hyperplane(const std::vector<RationalVector>& vertices,
                                              const RationalVector& coeff) {
    std::vector<RationalVector> zeros, pos, neg;
    std::vector<Rational> pos_val, neg_val;
    for (const RationalVector& v : vertices) {
        Rational value(0);
        for (size_t c = 0; c < coeff.size(); ++c) value += coeff[c] * v[c];
        if (value == 0) {
            zeros.push_back(v);
        } else if (value > 0) {
            pos.push_back(v);
            pos_val.push_back(value);
        } else {
            neg.push_back(v);
            neg_val.push_back(value);
        }
    }
    for (size_t i = 0; i < pos.size(); ++i) {
        for (size_t j = 0; j < neg.size(); ++j) {
            const Rational span = pos_val[i] - neg_val[j];
            RationalVector x(coeff.size());
            for (size_t c = 0; c < coeff.size(); ++c) {
                x[c] = (pos_val[i] * neg[j][c] - neg_val[j] * pos[i][c]) / span;
            }
            zeros.push_back(std::move(x));
        }
    }
    return zeros;
}

}  // namespace

okounkov::RationalPolytope assemble_moment_polytope(
    const TrinionGraph& graph, const okounkov::RationalPolytope& trinion_polytope) {
    check_fully_glued(graph);
    if (trinion_polytope.d <= 0 || trinion_polytope.d % 3 != 0) {
        throw InvalidGraph("trinion polytope dimension must be a positive multiple of 3");
    }
    if (trinion_polytope.vertices.empty()) throw InvalidGraph("empty trinion polytope");

    const int w = trinion_polytope.d / 3;  // reduced weights per puncture, n = w + 1
    const int total = graph.trinions * trinion_polytope.d;
    auto coord = [&](const SlotRef& s, int i) {
        return s.trinion * 3 * w + s.slot * w + i;  // i is 0-based
    };

    // Vertices of the product polytope: one factor vertex per trinion.
    std::vector<RationalVector> vertices;
    std::vector<size_t> pick(static_cast<size_t>(graph.trinions), 0);
    while (true) {
        RationalVector v(static_cast<size_t>(total), Rational(0));
        for (int t = 0; t < graph.trinions; ++t) {
            const RationalVector& fv = trinion_polytope.vertices[pick[static_cast<size_t>(t)]];
            for (int c = 0; c < trinion_polytope.d; ++c) {
                v[static_cast<size_t>(t * trinion_polytope.d + c)] = fv[static_cast<size_t>(c)];
            }
        }
        vertices.push_back(std::move(v));
        size_t t = 0;
        while (t < pick.size() && pick[t] + 1 == trinion_polytope.vertices.size()) {
            pick[t] = 0;
            ++t;
        }
        if (t == pick.size()) break;
        ++pick[t];
    }

    // Anti-diagonal constraints per edge, in reduced coordinates:
    //   b_1 = a_1 + ... + a_w,   b_i = -a_{w-i+2} for i = 2..w.
    for (const auto& [a, b] : graph.edges) {
        {
            RationalVector coeff(static_cast<size_t>(total), Rational(0));
            coeff[static_cast<size_t>(coord(b, 0))] = 1;
            for (int k = 0; k < w; ++k) coeff[static_cast<size_t>(coord(a, k))] = -1;
            vertices = cut_by_hyperplane(vertices, coeff);
        }
        for (int i = 2; i <= w; ++i) {
            RationalVector coeff(static_cast<size_t>(total), Rational(0));
            coeff[static_cast<size_t>(coord(b, i - 1))] = 1;
            coeff[static_cast<size_t>(coord(a, w - i + 1))] = 1;
            vertices = cut_by_hyperplane(vertices, coeff);
        }
        // Hull-reduce between cuts to keep the candidate set small.
        vertices = okounkov::convex_hull(total, std::move(vertices)).vertices;
        if (vertices.empty()) break;
    }

    RationalPolytope out;
    out.d = total;
    out.vertices = std::move(vertices);
    return out;
}

}  // namespace trinion::glue
