#pragma once

#include <set>
#include <vector>

#include "trinion/alcove.hpp"
#include "trinion/okounkov.hpp"

// Vanishing-pattern validation for framed sheaves, anti-diagonal glueing
// bookkeeping, and trinion-graph assembly for nodal curves.
namespace trinion::glue {

using alcove::AlcovePoint;
using alcove::FaceIndex;

struct PunctureData {
    int torsion_rank = 0;           // s
    std::set<int> beta_nonzero;     // 1-based flag degrees with nonzero framing
};

struct FramedSheafDescriptor {
    int n = 0;
    std::vector<PunctureData> punctures;
};

// Enforces, per puncture: s < n; and when s > 0: the top framing vanishes,
// framings below degree s vanish, and the degree-s framing is nonzero.
// Throws TorsionTooLarge or TorsionPatternViolation naming the clause.
FramedSheafDescriptor validate_framed_sheaf(const FramedSheafDescriptor& d);

/// True iff I2 = { n - i : i in I1 }.
bool match_patterns(const FaceIndex& i1, const FaceIndex& i2, int n);

/// max_i |a1_i + a2_{n-i+1}|; zero exactly when a2 is the glue partner of a1.
double glue_residual(const AlcovePoint& a1, const AlcovePoint& a2);

struct SlotRef {
    int trinion = 0;
    int slot = 0;  // 0, 1 or 2

    auto operator<=>(const SlotRef&) const = default;
};

struct TrinionGraph {
    int trinions = 0;
    std::vector<std::pair<SlotRef, SlotRef>> edges;
};

/// Fully glued graph of a genus-g surface: 2g-2 trinions in a ring plus g-1
/// rungs, 3g-3 edges, every slot used exactly once.
TrinionGraph trinion_graph(int genus);

// Product of one trinion polytope per trinion, cut by the anti-diagonal
// hyperplanes of every edge.  The trinion polytope lives in the reduced
// weight coordinates (a_1..a_{n-1} per puncture, three punctures), so its
// dimension is 3(n-1).  Exact rational arithmetic throughout.
okounkov::RationalPolytope assemble_moment_polytope(
    const TrinionGraph& graph, const okounkov::RationalPolytope& trinion_polytope);

}  // namespace trinion::glue
